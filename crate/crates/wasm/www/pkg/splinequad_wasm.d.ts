/* tslint:disable */
/* eslint-disable */

/**
 * A sampled curve handed to JavaScript.
 */
export class Plot {
    private constructor();
    free(): void;
    [Symbol.dispose](): void;
    readonly marks: Float64Array;
    readonly statNames: string[];
    readonly statValues: Float64Array;
    readonly x: Float64Array;
    readonly y: Float64Array;
}

export function lebesgueFunction(knots: Float64Array, per_interval: number): Plot;

export function peanoKernel(n: number, samples: number): Plot;

export function presetKnots(kind: string, n: number): Float64Array;

export function qiWeights(knots: Float64Array, simplified_moments: boolean): Plot;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly __wbg_plot_free: (a: number, b: number) => void;
    readonly lebesgueFunction: (a: number, b: number, c: number) => [number, number, number];
    readonly peanoKernel: (a: number, b: number) => [number, number, number];
    readonly plot_marks: (a: number) => [number, number];
    readonly plot_statNames: (a: number) => [number, number];
    readonly plot_statValues: (a: number) => [number, number];
    readonly plot_x: (a: number) => [number, number];
    readonly plot_y: (a: number) => [number, number];
    readonly presetKnots: (a: number, b: number, c: number) => [number, number, number, number];
    readonly qiWeights: (a: number, b: number, c: number) => [number, number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __externref_table_dealloc: (a: number) => void;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
    readonly __externref_drop_slice: (a: number, b: number) => void;
    readonly __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
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
