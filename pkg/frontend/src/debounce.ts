/**
 * Debounce with an injectable scheduler so tests can drive time by hand.
 */

export interface Scheduler {
  set(fn: () => void, ms: number): number;
  clear(id: number): void;
}

export const realScheduler: Scheduler = {
  set: (fn, ms) => setTimeout(fn, ms) as unknown as number,
  clear: (id) => clearTimeout(id),
};

/**
 * Collapse a burst of calls into one invocation after `ms` of quiet.
 */
export const debounce = (fn: () => void, ms: number, scheduler: Scheduler = realScheduler): (() => void) => {
  let pending: number | null = null;
  return () => {
    if (pending !== null) scheduler.clear(pending);
    pending = scheduler.set(() => {
      pending = null;
      fn();
    }, ms);
  };
};

/**
 * Manual scheduler for tests: nothing fires until flush() is called.
 */
export class ManualScheduler implements Scheduler {
  private nextId = 1;
  private tasks = new Map<number, () => void>();

  set(fn: () => void, _ms: number): number {
    const id = this.nextId++;
    this.tasks.set(id, fn);
    return id;
  }

  clear(id: number): void {
    this.tasks.delete(id);
  }

  flush(): void {
    const pending = [...this.tasks.values()];
    this.tasks.clear();
    for (const fn of pending) fn();
  }

  get pendingCount(): number {
    return this.tasks.size;
  }
}
