import { ApiError, StaleRequestError, StudioApi } from './api.js';
import { debounce, type Debounced } from './debounce.js';
import {
  CVD_KINDS,
  DEFAULT_STATE,
  KINDS,
  NUMERIC_FIELDS,
  OPTIONAL_FIELDS,
  RANGES,
  clampField,
  decodeFragment,
  encodeFragment,
  isOptionalField,
  specFromState,
  stateFromPreset,
  type NumericField,
  type StudioState,
} from './state.js';
import type { CvdKind, Kind, RegistryEntry, RenderRequest, RenderResponse } from './types.js';

/** Option value standing in for "sliders no longer match any preset". */
const CUSTOM_OPTION = '(custom)';

interface ParamRow {
  slider: HTMLInputElement;
  number: HTMLInputElement;
  auto: HTMLInputElement | null;
  error: HTMLElement;
}

export interface StudioOptions {
  /** Delay between the last control change and the render request. */
  debounceMs?: number;
}

/**
 * The palette studio: nine trajectory sliders, assessment controls, and live
 * panels (palette, CVD simulation, desaturated, spectrum).  All color math
 * happens in the service; this class only moves JSON and paints what comes
 * back.  State round-trips through the URL fragment so links are shareable.
 *
 * @example
 * ```ts
 * const studio = new Studio(document.getElementById('app')!, new StudioApi());
 * await studio.idle();  // panels painted
 * ```
 */
export class Studio {
  private state: StudioState = { ...DEFAULT_STATE };
  private presets: RegistryEntry[] = [];
  private lastRender: RenderResponse | null = null;
  private inflight = 0;

  private readonly api: StudioApi;
  private readonly root: HTMLElement;
  private readonly scheduleRender: Debounced<[]>;
  private readonly ready: Promise<void>;

  private readonly rows = new Map<NumericField, ParamRow>();
  private presetSelect!: HTMLSelectElement;
  private kindSelect!: HTMLSelectElement;
  private nSlider!: HTMLInputElement;
  private nOutput!: HTMLElement;
  private nError!: HTMLElement;
  private cvdSelect!: HTMLSelectElement;
  private severitySlider!: HTMLInputElement;
  private severityOutput!: HTMLElement;
  private desatToggle!: HTMLInputElement;
  private statusEl!: HTMLElement;
  private hexesEl!: HTMLElement;
  private originalRow!: HTMLElement;
  private cvdRow!: HTMLElement;
  private desatPanel!: HTMLElement;
  private desatRow!: HTMLElement;
  private spectrumEl!: HTMLElement;

  constructor(root: HTMLElement, api: StudioApi, options?: StudioOptions) {
    this.root = root;
    this.api = api;
    this.scheduleRender = debounce(options?.debounceMs ?? 100, () => {
      void this.doRender();
    });
    this.buildDom();
    this.wireControls();
    this.ready = this.boot();
  }

  /** Resolves once nothing is pending: no debounce timer, no open request. */
  async idle(): Promise<void> {
    await this.ready;
    while (this.scheduleRender.pending() || this.inflight > 0) {
      await new Promise((resolve) => setTimeout(resolve, 15));
    }
  }

  /** A copy of the current state, for tests and debugging. */
  get currentState(): StudioState {
    return { ...this.state };
  }

  get rendered(): RenderResponse | null {
    return this.lastRender;
  }

  /**
   * The downloadable JSON for the current view: the spec as sent to the
   * service, the sample count, and the colors the service returned.
   */
  exportJson(): string {
    return JSON.stringify(
      {
        spec: specFromState(this.state),
        n: this.state.n,
        colors: this.lastRender?.colors ?? [],
      },
      null,
      2,
    );
  }

  /**
   * Load a previously exported JSON document back onto the sliders.  Only the
   * spec and n are read; colors always come fresh from the service.
   */
  applyImport(text: string): void {
    let parsed: unknown;
    try {
      parsed = JSON.parse(text);
    } catch {
      throw new Error('import is not valid JSON');
    }
    if (typeof parsed !== 'object' || parsed === null) throw new Error('import is not a palette export');
    const doc = parsed as { spec?: unknown; n?: unknown };
    if (typeof doc.spec !== 'object' || doc.spec === null) throw new Error('import has no spec');
    const spec = doc.spec as Record<string, unknown>;
    const kind = spec.kind;
    if (typeof kind !== 'string' || !(KINDS as readonly string[]).includes(kind)) {
      throw new Error('import spec has no usable kind');
    }
    const next: StudioState = { ...this.state, kind: kind as Kind, preset: null };
    for (const field of NUMERIC_FIELDS) {
      const value = spec[field];
      if (typeof value === 'number' && Number.isFinite(value)) {
        next[field] = clampField(field, value);
      } else if (isOptionalField(field)) {
        next[field] = null;
      }
    }
    if (typeof doc.n === 'number' && Number.isFinite(doc.n)) {
      next.n = Math.round(clampField('n', doc.n));
    }
    this.state = next;
    this.applyControls();
    this.scheduleRender();
  }

  private async boot(): Promise<void> {
    try {
      this.presets = await this.api.registry();
      this.fillPresetSelect();
    } catch (err) {
      this.setStatus(`registry unavailable: ${err instanceof Error ? err.message : err}`, true);
    }
    const fromUrl = decodeFragment(typeof location !== 'undefined' ? location.hash : '');
    if (fromUrl) {
      this.state = fromUrl;
    } else {
      const start =
        this.presets.find((entry) => entry.name === 'Viridis') ?? this.presets[0];
      if (start) this.state = stateFromPreset(start, this.state);
    }
    this.applyControls();
    await this.doRender();
  }

  private buildDom(): void {
    this.root.classList.add('studio');
    this.root.innerHTML = `
      <section class="controls">
        <header>
          <h1>Palette studio</h1>
          <label>preset
            <select data-role="preset"></select>
          </label>
          <label>kind
            <select data-role="kind">
              ${KINDS.map((kind) => `<option value="${kind}">${kind}</option>`).join('')}
            </select>
          </label>
          <label>n
            <input type="range" data-role="n" min="${RANGES.n.min}" max="${RANGES.n.max}" step="${RANGES.n.step}">
            <output data-role="n-value"></output>
            <span class="field-error" data-role="error-n"></span>
          </label>
        </header>
        <div class="params">
          ${NUMERIC_FIELDS.map((field) => this.paramRowHtml(field)).join('')}
        </div>
        <div class="assess">
          <label>simulate
            <select data-role="cvd">
              ${CVD_KINDS.map((kind) => `<option value="${kind}">${kind}</option>`).join('')}
            </select>
          </label>
          <label>severity
            <input type="range" data-role="severity" min="${RANGES.severity.min}" max="${RANGES.severity.max}" step="${RANGES.severity.step}">
            <output data-role="severity-value"></output>
          </label>
          <label class="toggle">
            <input type="checkbox" data-role="desaturate"> desaturate
          </label>
        </div>
        <div class="exports">
          <button type="button" data-role="copy-hex">Copy hex</button>
          <button type="button" data-role="download-json">Download JSON</button>
          <button type="button" data-role="download-svg">Download SVG</button>
          <label class="import">Import JSON
            <input type="file" data-role="import" accept="application/json">
          </label>
        </div>
        <p class="status" data-role="status"></p>
      </section>
      <section class="panels">
        <article>
          <h2>Palette</h2>
          <div class="swatch-row" data-role="swatch-original"></div>
          <pre class="hexes" data-role="hexes"></pre>
        </article>
        <article>
          <h2>Simulated</h2>
          <div class="swatch-row" data-role="swatch-cvd"></div>
        </article>
        <article data-role="panel-desaturated" hidden>
          <h2>Desaturated</h2>
          <div class="swatch-row" data-role="swatch-desaturated"></div>
        </article>
        <article>
          <h2>Spectrum</h2>
          <div class="spectrum" data-role="spectrum"></div>
        </article>
      </section>
    `;

    const pick = <T extends Element>(selector: string): T => {
      const el = this.root.querySelector<T>(selector);
      if (!el) throw new Error(`studio template is missing ${selector}`);
      return el;
    };

    this.presetSelect = pick('[data-role="preset"]');
    this.kindSelect = pick('[data-role="kind"]');
    this.nSlider = pick('[data-role="n"]');
    this.nOutput = pick('[data-role="n-value"]');
    this.nError = pick('[data-role="error-n"]');
    this.cvdSelect = pick('[data-role="cvd"]');
    this.severitySlider = pick('[data-role="severity"]');
    this.severityOutput = pick('[data-role="severity-value"]');
    this.desatToggle = pick('[data-role="desaturate"]');
    this.statusEl = pick('[data-role="status"]');
    this.hexesEl = pick('[data-role="hexes"]');
    this.originalRow = pick('[data-role="swatch-original"]');
    this.cvdRow = pick('[data-role="swatch-cvd"]');
    this.desatPanel = pick('[data-role="panel-desaturated"]');
    this.desatRow = pick('[data-role="swatch-desaturated"]');
    this.spectrumEl = pick('[data-role="spectrum"]');

    for (const field of NUMERIC_FIELDS) {
      const row = pick<HTMLElement>(`[data-field="${field}"]`);
      this.rows.set(field, {
        slider: row.querySelector('input[type="range"]') as HTMLInputElement,
        number: row.querySelector('input[type="number"]') as HTMLInputElement,
        auto: row.querySelector('input[type="checkbox"]'),
        error: row.querySelector('.field-error') as HTMLElement,
      });
    }
  }

  private paramRowHtml(field: NumericField): string {
    const range = RANGES[field];
    const auto = OPTIONAL_FIELDS.has(field)
      ? `<label class="auto"><input type="checkbox"> auto</label>`
      : '';
    return `
      <div class="param-row" data-field="${field}">
        <label for="param-${field}">${field}</label>
        <input id="param-${field}" type="range" min="${range.min}" max="${range.max}" step="${range.step}">
        <input type="number" min="${range.min}" max="${range.max}" step="any">
        ${auto}
        <span class="field-error" data-role="error-${field}"></span>
      </div>
    `;
  }

  private wireControls(): void {
    for (const [field, row] of this.rows) {
      row.slider.addEventListener('input', () => {
        row.number.value = row.slider.value;
        this.commitParam(field, Number(row.slider.value));
      });
      row.number.addEventListener('input', () => {
        const value = Number(row.number.value);
        if (!Number.isFinite(value)) return;
        const clamped = clampField(field, value);
        row.slider.value = String(clamped);
        this.commitParam(field, clamped);
      });
      row.auto?.addEventListener('change', () => {
        if (row.auto!.checked) {
          this.commitParam(field, null);
        } else {
          this.commitParam(field, clampField(field, Number(row.slider.value)));
        }
        this.syncRow(field);
      });
    }

    this.kindSelect.addEventListener('change', () => {
      this.state.kind = this.kindSelect.value as Kind;
      this.markCustom();
      this.scheduleRender();
    });
    this.presetSelect.addEventListener('change', () => {
      const entry = this.presets.find((p) => p.name === this.presetSelect.value);
      if (!entry) return;
      this.state = stateFromPreset(entry, this.state);
      this.applyControls();
      this.scheduleRender();
    });
    this.nSlider.addEventListener('input', () => {
      // n is a view setting, not a spec edit: the preset stays selected
      this.state.n = Number(this.nSlider.value);
      this.nOutput.textContent = this.nSlider.value;
      this.scheduleRender();
    });
    this.cvdSelect.addEventListener('change', () => {
      this.state.cvdKind = this.cvdSelect.value as CvdKind;
      this.scheduleRender();
    });
    this.severitySlider.addEventListener('input', () => {
      this.state.severity = Number(this.severitySlider.value);
      this.severityOutput.textContent = this.severitySlider.value;
      this.scheduleRender();
    });
    this.desatToggle.addEventListener('change', () => {
      this.state.desaturate = this.desatToggle.checked;
      this.scheduleRender();
    });

    const button = (role: string): HTMLButtonElement =>
      this.root.querySelector(`[data-role="${role}"]`) as HTMLButtonElement;
    button('copy-hex').addEventListener('click', () => {
      void this.copyHexes();
    });
    button('download-json').addEventListener('click', () => {
      this.download('palette.json', 'application/json', this.exportJson());
    });
    button('download-svg').addEventListener('click', () => {
      void this.downloadSvg();
    });
    const importInput = this.root.querySelector('[data-role="import"]') as HTMLInputElement;
    importInput.addEventListener('change', () => {
      const file = importInput.files?.[0];
      if (!file) return;
      void file.text().then(
        (text) => {
          try {
            this.applyImport(text);
            this.setStatus('imported');
          } catch (err) {
            this.setStatus(err instanceof Error ? err.message : String(err), true);
          }
        },
        () => this.setStatus('could not read the file', true),
      );
      importInput.value = '';
    });
  }

  private commitParam(field: NumericField, value: number | null): void {
    if (this.state[field] === value) return;
    if (value === null) {
      if (!isOptionalField(field)) return;
      this.state[field] = null;
    } else {
      this.state[field] = value;
    }
    this.markCustom();
    this.scheduleRender();
  }

  private markCustom(): void {
    this.state.preset = null;
    this.presetSelect.value = CUSTOM_OPTION;
  }

  private fillPresetSelect(): void {
    this.presetSelect.textContent = '';
    const custom = document.createElement('option');
    custom.value = CUSTOM_OPTION;
    custom.textContent = CUSTOM_OPTION;
    this.presetSelect.appendChild(custom);
    for (const kind of KINDS) {
      const group = document.createElement('optgroup');
      group.label = kind;
      for (const entry of this.presets.filter((p) => p.kind === kind)) {
        const option = document.createElement('option');
        option.value = entry.name;
        option.textContent = entry.name;
        group.appendChild(option);
      }
      if (group.children.length > 0) this.presetSelect.appendChild(group);
    }
  }

  /** Push the whole state onto the controls (preset load, import, URL). */
  private applyControls(): void {
    this.kindSelect.value = this.state.kind;
    this.presetSelect.value = this.state.preset ?? CUSTOM_OPTION;
    for (const field of NUMERIC_FIELDS) this.syncRow(field);
    this.nSlider.value = String(this.state.n);
    this.nOutput.textContent = String(this.state.n);
    this.cvdSelect.value = this.state.cvdKind;
    this.severitySlider.value = String(this.state.severity);
    this.severityOutput.textContent = String(this.state.severity);
    this.desatToggle.checked = this.state.desaturate;
  }

  private syncRow(field: NumericField): void {
    const row = this.rows.get(field)!;
    const value = this.state[field];
    const isAuto = value === null;
    if (row.auto) row.auto.checked = isAuto;
    row.slider.disabled = isAuto;
    row.number.disabled = isAuto;
    if (!isAuto) {
      row.slider.value = String(value);
      row.number.value = String(value);
    } else {
      row.number.value = '';
    }
  }

  private async doRender(): Promise<void> {
    this.inflight += 1;
    try {
      this.writeFragment();
      const spec = specFromState(this.state);
      const request: RenderRequest = {
        spec,
        n: this.state.n,
        cvd: { kind: this.state.cvdKind, severity: this.state.severity },
      };
      if (this.state.desaturate) request.desaturate = 1;

      const [render, spectrum] = await Promise.allSettled([
        this.api.render(request),
        this.api.plot('spec', { spec, n: this.state.n }),
      ]);

      if (render.status === 'fulfilled') {
        this.clearErrors();
        this.applyRender(render.value);
      } else if (!(render.reason instanceof StaleRequestError)) {
        this.clearErrors();
        this.showError(render.reason);
      }
      if (spectrum.status === 'fulfilled') {
        this.spectrumEl.innerHTML = spectrum.value;
      } else if (!(spectrum.reason instanceof StaleRequestError) && render.status === 'fulfilled') {
        // only annotate the panel when the render itself had nothing to say
        this.spectrumEl.textContent =
          spectrum.reason instanceof ApiError ? spectrum.reason.message : 'spectrum unavailable';
      }
    } finally {
      this.inflight -= 1;
    }
  }

  private applyRender(response: RenderResponse): void {
    this.lastRender = response;
    this.fillSwatches(this.originalRow, response.colors);
    this.hexesEl.textContent = response.colors.join('\n');
    this.fillSwatches(this.cvdRow, response.cvd_colors ?? []);
    this.desatPanel.hidden = response.desaturated_colors === undefined;
    this.fillSwatches(this.desatRow, response.desaturated_colors ?? []);
  }

  private fillSwatches(row: HTMLElement, colors: readonly string[]): void {
    row.textContent = '';
    for (const hex of colors) {
      const cell = document.createElement('div');
      cell.className = 'swatch-cell';
      cell.style.background = hex;
      cell.dataset.hex = hex;
      cell.title = hex;
      row.appendChild(cell);
    }
  }

  private showError(err: unknown): void {
    if (err instanceof ApiError && err.field) {
      const row = this.rows.get(err.field as NumericField);
      if (row) {
        row.error.textContent = err.message;
        return;
      }
      if (err.field === 'n') {
        this.nError.textContent = err.message;
        return;
      }
    }
    this.setStatus(err instanceof Error ? err.message : String(err), true);
  }

  private clearErrors(): void {
    for (const row of this.rows.values()) row.error.textContent = '';
    this.nError.textContent = '';
    this.setStatus('');
  }

  private setStatus(text: string, isError = false): void {
    this.statusEl.textContent = text;
    this.statusEl.classList.toggle('error', isError);
  }

  private writeFragment(): void {
    const fragment = `#${encodeFragment(this.state)}`;
    try {
      history.replaceState(null, '', fragment);
    } catch {
      location.hash = fragment;
    }
  }

  private async copyHexes(): Promise<void> {
    if (!this.lastRender) return;
    const text = this.lastRender.colors.join('\n');
    if (typeof navigator !== 'undefined' && navigator.clipboard) {
      await navigator.clipboard.writeText(text);
      this.setStatus('hex codes copied');
    } else {
      this.setStatus('clipboard unavailable in this browser', true);
    }
  }

  private async downloadSvg(): Promise<void> {
    try {
      const svg = await this.api.plot('swatch', {
        spec: specFromState(this.state),
        n: this.state.n,
      });
      this.download('palette.svg', 'image/svg+xml', svg);
    } catch (err) {
      if (err instanceof StaleRequestError) return;
      this.setStatus(err instanceof Error ? err.message : String(err), true);
    }
  }

  private download(filename: string, type: string, text: string): void {
    const url = URL.createObjectURL(new Blob([text], { type }));
    const anchor = document.createElement('a');
    anchor.href = url;
    anchor.download = filename;
    anchor.click();
    URL.revokeObjectURL(url);
  }
}
