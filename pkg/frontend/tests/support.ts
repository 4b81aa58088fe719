import { spawn, spawnSync, type ChildProcess } from 'node:child_process';

/** True when the palette service's Python package is importable here. */
export function colortoolAvailable(): boolean {
  return spawnSync('python3', ['-c', 'import colortool'], { stdio: 'ignore' }).status === 0;
}

export interface ServiceHandle {
  base: string;
  proc: ChildProcess;
  stop(): void;
}

/** Start the real palette service on an ephemeral port and wait for it. */
export function startService(): Promise<ServiceHandle> {
  const proc = spawn(
    'python3',
    ['-m', 'colortool', 'serve', '--host', '127.0.0.1', '--port', '0'],
    { stdio: ['ignore', 'ignore', 'pipe'] },
  );
  return new Promise((resolve, reject) => {
    let banner = '';
    const timer = setTimeout(() => {
      proc.kill();
      reject(new Error(`service did not come up: ${banner}`));
    }, 15000);
    proc.stderr!.on('data', (chunk: Buffer) => {
      banner += String(chunk);
      const match = banner.match(/serving on (http:\/\/[\d.]+:\d+)/);
      if (match) {
        clearTimeout(timer);
        resolve({ base: match[1], proc, stop: () => proc.kill() });
      }
    });
    proc.on('exit', (code) => {
      clearTimeout(timer);
      reject(new Error(`service exited early (${code}): ${banner}`));
    });
  });
}

export function cli(...args: string[]): { stdout: string; stderr: string; status: number | null } {
  const run = spawnSync('python3', ['-m', 'colortool', ...args], { encoding: 'utf8' });
  return { stdout: run.stdout ?? '', stderr: run.stderr ?? '', status: run.status };
}

/** Ask the CLI (the one source of color math around) where a hex sits in HCL. */
export function hclOf(hex: string): { h: number; c: number; l: number } {
  const out = cli('convert', '--from', 'hex', '--to', 'hcl', hex);
  const parts = out.stdout.trim().split(/\s+/).map(Number);
  if (parts.length !== 3 || parts.some(Number.isNaN)) {
    throw new Error(`unexpected convert output: ${out.stdout} ${out.stderr}`);
  }
  return { h: parts[0], c: parts[1], l: parts[2] };
}

export function cellHexes(root: ParentNode, role: string): string[] {
  const cells = root.querySelectorAll(`[data-role="${role}"] .swatch-cell`);
  return Array.from(cells, (el) => (el as HTMLElement).dataset.hex ?? '');
}

export function setSlider(input: HTMLInputElement, value: number | string): void {
  input.value = String(value);
  input.dispatchEvent(new Event('input', { bubbles: true }));
}

export function setNumber(input: HTMLInputElement, value: number | string): void {
  input.value = String(value);
  input.dispatchEvent(new Event('input', { bubbles: true }));
}

export function setChecked(input: HTMLInputElement, checked: boolean): void {
  input.checked = checked;
  input.dispatchEvent(new Event('change', { bubbles: true }));
}

export function setSelect(select: HTMLSelectElement, value: string): void {
  select.value = value;
  select.dispatchEvent(new Event('change', { bubbles: true }));
}
