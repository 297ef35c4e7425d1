/* tslint:disable */
/* eslint-disable */
export const memory: WebAssembly.Memory;
export const __wbg_plot_free: (a: number, b: number) => void;
export const lebesgueFunction: (a: number, b: number, c: number) => [number, number, number];
export const peanoKernel: (a: number, b: number) => [number, number, number];
export const plot_marks: (a: number) => [number, number];
export const plot_statNames: (a: number) => [number, number];
export const plot_statValues: (a: number) => [number, number];
export const plot_x: (a: number) => [number, number];
export const plot_y: (a: number) => [number, number];
export const presetKnots: (a: number, b: number, c: number) => [number, number, number, number];
export const qiWeights: (a: number, b: number, c: number) => [number, number, number];
export const __wbindgen_externrefs: WebAssembly.Table;
export const __wbindgen_malloc: (a: number, b: number) => number;
export const __externref_table_dealloc: (a: number) => void;
export const __wbindgen_free: (a: number, b: number, c: number) => void;
export const __externref_drop_slice: (a: number, b: number) => void;
export const __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
export const __wbindgen_start: () => void;
