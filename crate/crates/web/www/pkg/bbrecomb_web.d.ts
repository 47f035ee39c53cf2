/* tslint:disable */
/* eslint-disable */

export class RunSummary {
    private constructor();
    free(): void;
    [Symbol.dispose](): void;
    readonly extent: number;
    readonly halted: boolean;
    readonly name: string;
    readonly ones: number;
    readonly steps: number;
}

/**
 * The catalog as pool-file lines, seeds first.
 */
export function catalog(): string;

/**
 * Recombines catalog ids or names (one per line) at comma-separated cuts and
 * returns the resulting name.
 */
export function recombine_sources(sources: string, cuts: string): string;

/**
 * Simulates a machine given by name or catalog id.
 */
export function run_machine(machine: string, step_limit: number): RunSummary;

/**
 * Space-time diagram: `rows` tape snapshots of `width` cells centred on the
 * start cell, one per step after skipping `skip` steps. Rows after a halt
 * repeat the final tape.
 */
export function space_time(machine: string, skip: number, rows: number, width: number): Uint8Array;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly __wbg_runsummary_free: (a: number, b: number) => void;
    readonly catalog: () => [number, number];
    readonly recombine_sources: (a: number, b: number, c: number, d: number) => [number, number, number, number];
    readonly run_machine: (a: number, b: number, c: number) => [number, number, number];
    readonly runsummary_extent: (a: number) => number;
    readonly runsummary_halted: (a: number) => number;
    readonly runsummary_name: (a: number) => [number, number];
    readonly runsummary_ones: (a: number) => number;
    readonly runsummary_steps: (a: number) => number;
    readonly space_time: (a: number, b: number, c: number, d: number, e: number) => [number, number, number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
    readonly __externref_table_dealloc: (a: number) => void;
    readonly __wbindgen_start: () => void;
}

export type SyncInitInput = BufferSource | WebAssembly.Module;

/**
 * Instantiates the given `module`, which can either be bytes or
 * a precompiled `WebAssembly.Module`.
 *
 * @param {{ module: SyncInitInput }} module - Passing `SyncInitInput` directly is deprecated.
 *
 * @returns {InitOutput}
 */
export function initSync(module: { module: SyncInitInput } | SyncInitInput): InitOutput;

/**
 * If `module_or_path` is {RequestInfo} or {URL}, makes a request and
 * for everything else, calls `WebAssembly.instantiate` directly.
 *
 * @param {{ module_or_path: InitInput | Promise<InitInput> }} module_or_path - Passing `InitInput` directly is deprecated.
 *
 * @returns {Promise<InitOutput>}
 */
export default function __wbg_init (module_or_path?: { module_or_path: InitInput | Promise<InitInput> } | InitInput | Promise<InitInput>): Promise<InitOutput>;
