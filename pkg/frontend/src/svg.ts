/**
 * Small SVG scene builder: enough axes/series/legend machinery for the
 * figure kinds this pipeline produces, with no DOM dependency.
 */

export interface Extent {
  lo: number;
  hi: number;
}

export function niceTicks(lo: number, hi: number, n = 6): number[] {
  if (!(hi > lo)) return [lo];
  const span = hi - lo;
  const step0 = span / Math.max(1, n);
  const mag = Math.pow(10, Math.floor(Math.log10(step0)));
  let step = mag;
  for (const mult of [1, 2, 2.5, 5, 10]) {
    if (mag * mult >= step0) {
      step = mag * mult;
      break;
    }
  }
  const ticks: number[] = [];
  let t = Math.ceil(lo / step) * step;
  for (; t <= hi + 1e-12 * span; t += step) ticks.push(Number(t.toPrecision(12)));
  return ticks;
}

export function fmtTick(v: number): string {
  if (v === 0) return "0";
  const a = Math.abs(v);
  if (a >= 1e4 || a < 1e-3) return v.toExponential(0);
  return Number(v.toPrecision(6)).toString();
}

export class Frame {
  readonly parts: string[] = [];

  constructor(
    readonly width: number,
    readonly height: number,
    readonly margin = { left: 58, right: 14, top: 28, bottom: 42 },
    readonly xext: Extent = { lo: 0, hi: 1 },
    readonly yext: Extent = { lo: 0, hi: 1 },
    readonly xlog = false,
    readonly ylog = false,
  ) {}

  sx(x: number): number {
    const { lo, hi } = this.xext;
    const t = this.xlog
      ? (Math.log10(x) - Math.log10(lo)) / (Math.log10(hi) - Math.log10(lo))
      : (x - lo) / (hi - lo);
    return this.margin.left + t * (this.width - this.margin.left - this.margin.right);
  }

  sy(y: number): number {
    const { lo, hi } = this.yext;
    const t = this.ylog
      ? (Math.log10(y) - Math.log10(lo)) / (Math.log10(hi) - Math.log10(lo))
      : (y - lo) / (hi - lo);
    return this.height - this.margin.bottom
      - t * (this.height - this.margin.top - this.margin.bottom);
  }

  axes(xlabel: string, ylabel: string, title: string): void {
    const x0 = this.margin.left;
    const x1 = this.width - this.margin.right;
    const y0 = this.height - this.margin.bottom;
    const y1 = this.margin.top;
    this.parts.push(
      `<rect x="${x0}" y="${y1}" width="${x1 - x0}" height="${y0 - y1}" fill="white" stroke="black" stroke-width="1"/>`,
    );
    const xticks = this.xlog
      ? logTicks(this.xext)
      : niceTicks(this.xext.lo, this.xext.hi);
    for (const t of xticks) {
      const px = this.sx(t);
      this.parts.push(
        `<line x1="${px.toFixed(2)}" y1="${y0}" x2="${px.toFixed(2)}" y2="${y0 + 4}" stroke="black"/>`,
        `<text x="${px.toFixed(2)}" y="${y0 + 16}" font-size="10" text-anchor="middle">${fmtTick(t)}</text>`,
      );
    }
    const yticks = this.ylog
      ? logTicks(this.yext)
      : niceTicks(this.yext.lo, this.yext.hi);
    for (const t of yticks) {
      const py = this.sy(t);
      this.parts.push(
        `<line x1="${x0 - 4}" y1="${py.toFixed(2)}" x2="${x0}" y2="${py.toFixed(2)}" stroke="black"/>`,
        `<text x="${x0 - 6}" y="${(py + 3).toFixed(2)}" font-size="10" text-anchor="end">${fmtTick(t)}</text>`,
      );
    }
    this.parts.push(
      `<text x="${(x0 + x1) / 2}" y="${this.height - 8}" font-size="11" text-anchor="middle">${xlabel}</text>`,
      `<text x="14" y="${(y0 + y1) / 2}" font-size="11" text-anchor="middle" transform="rotate(-90 14 ${(y0 + y1) / 2})">${ylabel}</text>`,
      `<text x="${(x0 + x1) / 2}" y="18" font-size="12" text-anchor="middle" font-weight="bold">${title}</text>`,
    );
  }

  polyline(xs: number[], ys: number[], color: string, width = 1.2, dash = ""): void {
    const pts: string[] = [];
    for (let i = 0; i < xs.length; i++) {
      if (!inExtent(xs[i], this.xext) || !Number.isFinite(ys[i])) continue;
      pts.push(`${this.sx(xs[i]).toFixed(2)},${this.sy(ys[i]).toFixed(2)}`);
    }
    const dashAttr = dash ? ` stroke-dasharray="${dash}"` : "";
    this.parts.push(
      `<polyline points="${pts.join(" ")}" fill="none" stroke="${color}" stroke-width="${width}"${dashAttr}/>`,
    );
  }

  markers(xs: number[], ys: number[], color: string, r = 2.0): void {
    for (let i = 0; i < xs.length; i++) {
      if (!inExtent(xs[i], this.xext) || !Number.isFinite(ys[i])) continue;
      this.parts.push(
        `<circle cx="${this.sx(xs[i]).toFixed(2)}" cy="${this.sy(ys[i]).toFixed(2)}" r="${r}" fill="${color}"/>`,
      );
    }
  }

  legend(entries: { label: string; color: string; line?: boolean }[]): void {
    const x = this.width - this.margin.right - 120;
    let y = this.margin.top + 12;
    for (const e of entries) {
      if (e.line) {
        this.parts.push(
          `<line x1="${x}" y1="${y - 3}" x2="${x + 18}" y2="${y - 3}" stroke="${e.color}" stroke-width="1.5"/>`,
        );
      } else {
        this.parts.push(`<circle cx="${x + 9}" cy="${y - 3}" r="2.5" fill="${e.color}"/>`);
      }
      this.parts.push(
        `<text x="${x + 24}" y="${y}" font-size="10">${e.label}</text>`,
      );
      y += 14;
    }
  }

  render(): string {
    return `<svg xmlns="http://www.w3.org/2000/svg" width="${this.width}" height="${this.height}" viewBox="0 0 ${this.width} ${this.height}">\n`
      + `<rect width="100%" height="100%" fill="white"/>\n`
      + this.parts.join("\n")
      + `\n</svg>\n`;
  }
}

function inExtent(v: number, e: Extent): boolean {
  return v >= e.lo - 1e-12 && v <= e.hi + 1e-12;
}

function logTicks(e: Extent): number[] {
  const ticks: number[] = [];
  const lo = Math.ceil(Math.log10(e.lo) - 1e-9);
  const hi = Math.floor(Math.log10(e.hi) + 1e-9);
  for (let k = lo; k <= hi; k++) ticks.push(Math.pow(10, k));
  if (ticks.length === 0) ticks.push(e.lo, e.hi);
  return ticks;
}

export function padExtent(values: number[], frac = 0.05): Extent {
  let lo = Infinity;
  let hi = -Infinity;
  for (const v of values) {
    if (!Number.isFinite(v)) continue;
    lo = Math.min(lo, v);
    hi = Math.max(hi, v);
  }
  if (!(hi > lo)) {
    // degenerate (constant) data still needs a drawable range
    const c = Number.isFinite(lo) ? lo : 0;
    return { lo: c - 0.5, hi: c + 0.5 };
  }
  const pad = frac * (hi - lo);
  return { lo: lo - pad, hi: hi + pad };
}
