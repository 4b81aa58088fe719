import type { CvdKind, Kind, RegistryEntry, SpecPayload } from './types.js';

/**
 * Everything the studio needs to reproduce a view.  The whole record fits in
 * the URL fragment, so a copied link restores the exact same panels.
 */
export interface StudioState {
  kind: Kind;
  h1: number;
  /** null means "let the engine pick", mirrored by the auto checkbox. */
  h2: number | null;
  c1: number;
  c2: number | null;
  cmax: number | null;
  l1: number;
  l2: number | null;
  p1: number;
  p2: number | null;
  n: number;
  cvdKind: CvdKind;
  severity: number;
  desaturate: boolean;
  /** Registry name until the first manual edit, then null ("custom"). */
  preset: string | null;
}

export type NumericField = 'h1' | 'h2' | 'c1' | 'c2' | 'cmax' | 'l1' | 'l2' | 'p1' | 'p2';

export const NUMERIC_FIELDS: readonly NumericField[] = [
  'h1', 'h2', 'c1', 'c2', 'cmax', 'l1', 'l2', 'p1', 'p2',
];

export type OptionalField = 'h2' | 'c2' | 'cmax' | 'l2' | 'p2';

/** Fields the engine can default on its own; their sliders have an auto mode. */
export const OPTIONAL_FIELDS: ReadonlySet<NumericField> = new Set<NumericField>([
  'h2', 'c2', 'cmax', 'l2', 'p2',
]);

export function isOptionalField(field: NumericField): field is OptionalField {
  return OPTIONAL_FIELDS.has(field);
}

export const KINDS: readonly Kind[] = ['qualitative', 'sequential', 'diverging'];

export const CVD_KINDS: readonly CvdKind[] = ['deutan', 'protan', 'tritan'];

export interface SliderRange {
  min: number;
  max: number;
  step: number;
}

export const RANGES: Record<NumericField | 'n' | 'severity', SliderRange> = {
  h1: { min: -360, max: 360, step: 1 },
  h2: { min: -360, max: 360, step: 1 },
  c1: { min: 0, max: 180, step: 1 },
  c2: { min: 0, max: 180, step: 1 },
  cmax: { min: 0, max: 180, step: 1 },
  l1: { min: 0, max: 100, step: 1 },
  l2: { min: 0, max: 100, step: 1 },
  p1: { min: 0.1, max: 3, step: 0.05 },
  p2: { min: 0.1, max: 3, step: 0.05 },
  n: { min: 1, max: 24, step: 1 },
  severity: { min: 0, max: 1, step: 0.01 },
};

export const DEFAULT_STATE: StudioState = {
  kind: 'sequential',
  h1: 0,
  h2: null,
  c1: 50,
  c2: null,
  cmax: null,
  l1: 40,
  l2: null,
  p1: 1,
  p2: null,
  n: 7,
  cvdKind: 'deutan',
  severity: 1,
  desaturate: false,
  preset: null,
};

export function clampField(field: NumericField | 'n' | 'severity', value: number): number {
  const range = RANGES[field];
  if (Number.isNaN(value)) return range.min;
  return Math.min(range.max, Math.max(range.min, value));
}

/** Print a number the way it reads on a slider: short, no float noise. */
function fmt(value: number): string {
  return String(Math.round(value * 10000) / 10000);
}

/**
 * Serialize state into a URL fragment (without the leading '#').
 * Auto parameters encode as empty values so decode can tell them from
 * "key not present at all".
 */
export function encodeFragment(state: StudioState): string {
  const params = new URLSearchParams();
  params.set('kind', state.kind);
  for (const field of NUMERIC_FIELDS) {
    const value = state[field];
    params.set(field, value === null ? '' : fmt(value));
  }
  params.set('n', fmt(state.n));
  params.set('cvd', state.cvdKind);
  params.set('sev', fmt(state.severity));
  params.set('desat', state.desaturate ? '1' : '0');
  if (state.preset !== null) params.set('preset', state.preset);
  return params.toString();
}

/**
 * Rebuild state from a URL fragment.  Returns null when the fragment carries
 * no recognizable state, so the caller can fall back to a preset.  Malformed
 * values degrade to defaults or clamp into slider range rather than throwing:
 * a mangled shared link should still show something sensible.
 */
export function decodeFragment(fragment: string): StudioState | null {
  const raw = fragment.startsWith('#') ? fragment.slice(1) : fragment;
  if (!raw) return null;
  const params = new URLSearchParams(raw);
  const known = ['kind', ...NUMERIC_FIELDS, 'n', 'cvd', 'sev', 'desat', 'preset'];
  if (!known.some((key) => params.has(key))) return null;

  const state: StudioState = { ...DEFAULT_STATE };
  const kind = params.get('kind');
  if (kind && (KINDS as readonly string[]).includes(kind)) state.kind = kind as Kind;
  for (const field of NUMERIC_FIELDS) {
    const value = params.get(field);
    if (value === null) continue;
    if (value === '') {
      if (isOptionalField(field)) state[field] = null;
      continue;
    }
    const parsed = Number(value);
    if (Number.isFinite(parsed)) state[field] = clampField(field, parsed);
  }
  const n = Number(params.get('n'));
  if (Number.isFinite(n) && n >= 1) state.n = Math.round(clampField('n', n));
  const cvd = params.get('cvd');
  if (cvd && (CVD_KINDS as readonly string[]).includes(cvd)) state.cvdKind = cvd as CvdKind;
  const severity = Number(params.get('sev'));
  if (Number.isFinite(severity)) state.severity = clampField('severity', severity);
  if (params.has('desat')) state.desaturate = params.get('desat') === '1';
  state.preset = params.get('preset');
  return state;
}

/**
 * The spec the service should render for this state.  All nine parameters are
 * sent explicitly, null for auto ones; the engine skips nulls and applies its
 * own defaults, so an untouched preset round-trips through here byte-exactly.
 */
export function specFromState(state: StudioState): SpecPayload {
  return {
    kind: state.kind,
    name: state.preset,
    h1: state.h1,
    h2: state.h2,
    c1: state.c1,
    c2: state.c2,
    cmax: state.cmax,
    l1: state.l1,
    l2: state.l2,
    p1: state.p1,
    p2: state.p2,
  };
}

/** Load a registry entry onto the sliders, keeping view settings (n, CVD, ...). */
export function stateFromPreset(entry: RegistryEntry, previous: StudioState): StudioState {
  const spec = entry.spec;
  return {
    ...previous,
    kind: entry.kind,
    h1: spec.h1,
    h2: spec.h2 ?? null,
    c1: spec.c1,
    c2: spec.c2 ?? null,
    cmax: spec.cmax ?? null,
    l1: spec.l1,
    l2: spec.l2 ?? null,
    p1: spec.p1 ?? 1,
    p2: spec.p2 ?? null,
    preset: entry.name,
  };
}
