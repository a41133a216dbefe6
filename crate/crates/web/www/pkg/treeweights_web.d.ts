/* tslint:disable */
/* eslint-disable */

/**
 * Contact matrix of one ordered tree at the point `u`.
 */
export function contact_matrix(graph_json: string, partition: string, order: string, u: Float64Array): string;

/**
 * JSON text of a bundled example graph (`"triangle"` or `"kite"`).
 */
export function example_graph(name: string): string;

/**
 * Partition tree weights with per-ordering breakdown.
 */
export function partition_weights(graph_json: string, partition: string): string;

/**
 * Sector census next to the all-singletons partition route.
 */
export function symmetric_weights(graph_json: string, guard: number): string;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly contact_matrix: (a: number, b: number, c: number, d: number, e: number, f: number, g: number, h: number) => [number, number, number, number];
    readonly example_graph: (a: number, b: number) => [number, number, number, number];
    readonly partition_weights: (a: number, b: number, c: number, d: number) => [number, number, number, number];
    readonly symmetric_weights: (a: number, b: number, c: number) => [number, number, number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
    readonly __externref_table_dealloc: (a: number) => void;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
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
