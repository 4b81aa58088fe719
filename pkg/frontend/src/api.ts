import type { RegistryEntry, RenderRequest, RenderResponse, SpecPayload } from './types.js';

/** An error the service reported, pointing at the offending request field. */
export class ApiError extends Error {
  constructor(
    message: string,
    readonly field: string | null,
    readonly status: number,
  ) {
    super(message);
    this.name = 'ApiError';
  }
}

/** Thrown for a request that lost the latest-wins race; callers drop it. */
export class StaleRequestError extends Error {
  constructor() {
    super('superseded by a newer request');
    this.name = 'StaleRequestError';
  }
}

interface Slot {
  controller: AbortController;
  seq: number;
}

/**
 * Fetch wrapper for the palette service.  Each named slot holds at most one
 * in-flight request: scheduling a new one aborts the old, and a reply that
 * arrives for a superseded request surfaces as StaleRequestError instead of
 * data, so panels only ever show the newest state.
 */
export class StudioApi {
  private readonly slots = new Map<string, Slot>();

  constructor(readonly base: string = '') {}

  async registry(): Promise<RegistryEntry[]> {
    const res = await this.unwrap(await fetch(`${this.base}/api/registry`));
    return (await res.json()) as RegistryEntry[];
  }

  async render(request: RenderRequest, slot = 'render'): Promise<RenderResponse> {
    return this.inSlot(slot, async (signal) => {
      const res = await this.unwrap(await this.post('/api/render', request, signal));
      return (await res.json()) as RenderResponse;
    });
  }

  /** Fetch one of the diagnostic plots as SVG text. */
  async plot(
    which: 'swatch' | 'spec' | 'hcl',
    request: { spec: SpecPayload; n: number },
    slot = `plot:${which}`,
  ): Promise<string> {
    return this.inSlot(slot, async (signal) => {
      const res = await this.unwrap(await this.post(`/api/plot/${which}`, request, signal));
      return res.text();
    });
  }

  private post(path: string, body: unknown, signal: AbortSignal): Promise<Response> {
    return fetch(`${this.base}${path}`, {
      method: 'POST',
      headers: { 'Content-Type': 'application/json' },
      body: JSON.stringify(body),
      signal,
    });
  }

  private async unwrap(res: Response): Promise<Response> {
    if (res.ok) return res;
    let message = `request failed with status ${res.status}`;
    let field: string | null = null;
    try {
      const body = (await res.json()) as { error?: unknown; field?: unknown };
      if (typeof body.error === 'string') message = body.error;
      if (typeof body.field === 'string') field = body.field;
    } catch {
      // non-JSON error body, keep the generic message
    }
    throw new ApiError(message, field, res.status);
  }

  private async inSlot<T>(slot: string, run: (signal: AbortSignal) => Promise<T>): Promise<T> {
    this.slots.get(slot)?.controller.abort();
    const entry: Slot = {
      controller: new AbortController(),
      seq: (this.slots.get(slot)?.seq ?? 0) + 1,
    };
    this.slots.set(slot, entry);
    const current = () => this.slots.get(slot)?.seq === entry.seq;
    try {
      const result = await run(entry.controller.signal);
      if (!current()) throw new StaleRequestError();
      return result;
    } catch (err) {
      // an abort means a newer request took over; report staleness, not failure
      if (!current()) throw new StaleRequestError();
      throw err;
    } finally {
      if (current()) this.slots.delete(slot);
    }
  }
}
