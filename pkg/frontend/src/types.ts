/** Payload shapes of the palette service JSON API. */

export type Kind = 'qualitative' | 'sequential' | 'diverging';

export type CvdKind = 'deutan' | 'protan' | 'tritan';

/**
 * A palette spec as the service accepts and emits it.  Optional trajectory
 * parameters travel as null when the engine should pick its own default.
 */
export interface SpecPayload {
  kind: Kind;
  name?: string | null;
  h1: number;
  h2?: number | null;
  c1: number;
  c2?: number | null;
  cmax?: number | null;
  l1: number;
  l2?: number | null;
  p1?: number | null;
  p2?: number | null;
  reverse?: boolean;
  fixup?: boolean;
}

export interface RegistryEntry {
  name: string;
  kind: Kind;
  spec: SpecPayload;
}

export interface RenderRequest {
  spec: SpecPayload;
  n: number;
  cvd?: { kind: CvdKind; severity: number };
  desaturate?: number;
}

export interface RenderResponse {
  colors: string[];
  luminance: number[];
  settings: string;
  cvd_colors?: string[];
  desaturated_colors?: string[];
}
