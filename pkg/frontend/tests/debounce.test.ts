import { afterEach, beforeEach, describe, expect, it, vi } from 'vitest';
import { debounce } from '../src/debounce.js';

beforeEach(() => {
  vi.useFakeTimers();
});

afterEach(() => {
  vi.useRealTimers();
});

describe('debounce', () => {
  it('collapses a burst into one trailing call with the last arguments', () => {
    const calls: number[] = [];
    const poke = debounce(100, (value: number) => calls.push(value));
    poke(1);
    vi.advanceTimersByTime(50);
    poke(2);
    vi.advanceTimersByTime(50);
    poke(3);
    expect(calls).toEqual([]);
    vi.advanceTimersByTime(100);
    expect(calls).toEqual([3]);
  });

  it('fires separate bursts separately', () => {
    const calls: number[] = [];
    const poke = debounce(100, (value: number) => calls.push(value));
    poke(1);
    vi.advanceTimersByTime(150);
    poke(2);
    vi.advanceTimersByTime(150);
    expect(calls).toEqual([1, 2]);
  });

  it('flush runs the held call immediately, once', () => {
    const calls: number[] = [];
    const poke = debounce(100, (value: number) => calls.push(value));
    poke(7);
    poke.flush();
    expect(calls).toEqual([7]);
    expect(poke.pending()).toBe(false);
    vi.advanceTimersByTime(200);
    expect(calls).toEqual([7]);
  });

  it('flush without a held call does nothing', () => {
    const calls: number[] = [];
    const poke = debounce(100, (value: number) => calls.push(value));
    poke.flush();
    expect(calls).toEqual([]);
  });

  it('cancel drops the held call', () => {
    const calls: number[] = [];
    const poke = debounce(100, (value: number) => calls.push(value));
    poke(1);
    poke.cancel();
    vi.advanceTimersByTime(200);
    expect(calls).toEqual([]);
    expect(poke.pending()).toBe(false);
  });

  it('reports pending while the timer runs', () => {
    const poke = debounce(100, () => undefined);
    expect(poke.pending()).toBe(false);
    poke();
    expect(poke.pending()).toBe(true);
    vi.advanceTimersByTime(100);
    expect(poke.pending()).toBe(false);
  });
});
