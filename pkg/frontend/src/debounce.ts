export interface Debounced<A extends unknown[]> {
  (...args: A): void;
  /** Run the held call now instead of waiting out the delay. */
  flush(): void;
  cancel(): void;
  pending(): boolean;
}

/**
 * Trailing-edge debounce: the wrapped function runs once, `ms` after the last
 * poke, with the last arguments.  Keeps slider drags from flooding the
 * service while still feeling continuous.
 */
export function debounce<A extends unknown[]>(ms: number, fn: (...args: A) => void): Debounced<A> {
  let timer: ReturnType<typeof setTimeout> | null = null;
  let held: A | null = null;

  const fire = () => {
    timer = null;
    if (held !== null) {
      const args = held;
      held = null;
      fn(...args);
    }
  };

  const wrapped = (...args: A) => {
    held = args;
    if (timer !== null) clearTimeout(timer);
    timer = setTimeout(fire, ms);
  };
  wrapped.flush = () => {
    if (timer !== null) {
      clearTimeout(timer);
      fire();
    }
  };
  wrapped.cancel = () => {
    if (timer !== null) clearTimeout(timer);
    timer = null;
    held = null;
  };
  wrapped.pending = () => timer !== null;
  return wrapped;
}
