/* tslint:disable */
/* eslint-disable */
export const memory: WebAssembly.Memory;
export const __wbg_runsummary_free: (a: number, b: number) => void;
export const catalog: () => [number, number];
export const recombine_sources: (a: number, b: number, c: number, d: number) => [number, number, number, number];
export const run_machine: (a: number, b: number, c: number) => [number, number, number];
export const runsummary_extent: (a: number) => number;
export const runsummary_halted: (a: number) => number;
export const runsummary_name: (a: number) => [number, number];
export const runsummary_ones: (a: number) => number;
export const runsummary_steps: (a: number) => number;
export const space_time: (a: number, b: number, c: number, d: number, e: number) => [number, number, number, number];
export const __wbindgen_externrefs: WebAssembly.Table;
export const __wbindgen_free: (a: number, b: number, c: number) => void;
export const __wbindgen_malloc: (a: number, b: number) => number;
export const __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
export const __externref_table_dealloc: (a: number) => void;
export const __wbindgen_start: () => void;
