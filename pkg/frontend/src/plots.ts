/**
 * The three figure kinds: overlaid 1-D density profiles (full view or
 * zoom pane), 2-D density pseudocolor maps, and log-log convergence
 * charts with fitted slopes.
 */

import * as fs from "node:fs";
import * as path from "node:path";

import { readErrorTable, readSnapshot1D, readSnapshot2D } from "./snapshot.js";
import { encodePng, rasterize } from "./raster.js";
import { Frame, padExtent } from "./svg.js";

const SERIES_COLORS = [
  "#d62728", "#1f77b4", "#2ca02c", "#9467bd", "#ff7f0e",
  "#8c564b", "#e377c2", "#17becf",
];

export interface Line1DJob {
  kind: "line1d";
  inputs: string[];            // computed snapshots, one per scheme
  labels?: string[];
  reference?: string;          // optional reference/exact snapshot
  zoom?: [number, number];     // x-window; makes this a zoom pane
  out: string;
  title?: string;
}

export interface Field2DJob {
  kind: "field2d";
  input: string;
  out: string;                 // .png
  title?: string;
}

export interface RatesJob {
  kind: "rates";
  tables: string[];            // error tables, one per series
  labels?: string[];
  out: string;
  title?: string;
}

export type PlotJob = Line1DJob | Field2DJob | RatesJob;

function ensureDir(p: string): void {
  fs.mkdirSync(path.dirname(path.resolve(p)), { recursive: true });
}

export function plotLine1d(job: Line1DJob): string {
  if (!job.inputs || job.inputs.length === 0) {
    throw new Error("line1d: empty series list");
  }
  const snaps = job.inputs.map(readSnapshot1D);
  const ref = job.reference ? readSnapshot1D(job.reference) : null;
  const zoom = job.zoom;
  if (zoom && !(zoom[1] > zoom[0])) {
    throw new Error(`line1d: bad zoom window [${zoom}]`);
  }
  const xext = zoom
    ? { lo: zoom[0], hi: zoom[1] }
    : padExtent(snaps[0].x, 0.0);
  const inWindow = (xs: number[], vs: number[]) =>
    vs.filter((_, i) => xs[i] >= xext.lo && xs[i] <= xext.hi);
  const yvals: number[] = [];
  for (const s of snaps) yvals.push(...inWindow(s.x, s.rho));
  if (ref) yvals.push(...inWindow(ref.x, ref.rho));
  const frame = new Frame(520, 390, undefined, xext, padExtent(yvals, 0.08));
  frame.axes("x", "density", job.title ?? "");
  const legend: { label: string; color: string; line?: boolean }[] = [];
  if (ref) {
    frame.polyline(ref.x, ref.rho, "#444444", 1.4);
    legend.push({ label: "reference", color: "#444444", line: true });
  }
  snaps.forEach((s, i) => {
    const color = SERIES_COLORS[i % SERIES_COLORS.length];
    frame.markers(s.x, s.rho, color, zoom ? 2.6 : 2.0);
    legend.push({
      label: job.labels?.[i] ?? s.header["scheme"] ?? `series ${i + 1}`,
      color,
    });
  });
  frame.legend(legend);
  ensureDir(job.out);
  fs.writeFileSync(job.out, frame.render());
  return job.out;
}

export function plotField2d(job: Field2DJob): string {
  const snap = readSnapshot2D(job.input);
  const { pixels, width, height } = rasterize(snap.rho);
  ensureDir(job.out);
  fs.writeFileSync(job.out, encodePng(pixels, width, height));
  return job.out;
}

/** Least-squares convergence rate: slope of log(error) against log(1/mesh). */
export function fitSlope(mesh: number[], error: number[]): number {
  if (mesh.length < 2) throw new Error("rates: need at least 2 meshes");
  const xs = mesh.map((m) => Math.log(1.0 / m));
  const ys = error.map((e) => Math.log(e));
  const n = xs.length;
  const mx = xs.reduce((a, b) => a + b, 0) / n;
  const my = ys.reduce((a, b) => a + b, 0) / n;
  let num = 0;
  let den = 0;
  for (let i = 0; i < n; i++) {
    num += (xs[i] - mx) * (ys[i] - my);
    den += (xs[i] - mx) * (xs[i] - mx);
  }
  return num / den;
}

export function plotRates(job: RatesJob): { out: string; slopes: number[] } {
  if (!job.tables || job.tables.length === 0) {
    throw new Error("rates: no tables given");
  }
  const tables = job.tables.map(readErrorTable);
  const slopes = tables.map((t) => fitSlope(t.mesh, t.error));
  const allMesh = tables.flatMap((t) => t.mesh);
  const allErr = tables.flatMap((t) => t.error);
  const xext = {
    lo: Math.min(...allMesh) / 1.3,
    hi: Math.max(...allMesh) * 1.3,
  };
  const yext = {
    lo: Math.min(...allErr) / 3,
    hi: Math.max(...allErr) * 3,
  };
  const frame = new Frame(520, 390, undefined, xext, yext, true, true);
  frame.axes("mesh", "L1 error", job.title ?? "convergence");
  const legend: { label: string; color: string; line?: boolean }[] = [];
  tables.forEach((t, i) => {
    const color = SERIES_COLORS[i % SERIES_COLORS.length];
    frame.polyline(t.mesh, t.error, color, 1.2);
    frame.markers(t.mesh, t.error, color, 2.5);
    const label = job.labels?.[i]
      ?? `${t.header["scheme"] ?? "series"} o${t.header["order"] ?? "?"}`;
    legend.push({ label: `${label} (${slopes[i].toFixed(2)})`, color });
  });
  // reference slopes 1/2/3/5 anchored at the coarsest mesh of series 0
  const m0 = tables[0].mesh[0];
  const e0 = tables[0].error[0];
  for (const p of [1, 2, 3, 5]) {
    const xs = [xext.lo * 1.3, xext.hi / 1.3];
    const ys = xs.map((m) => e0 * Math.pow(m0 / m, p));
    frame.polyline(xs, ys.map((y) => Math.min(Math.max(y, yext.lo), yext.hi)),
      "#aaaaaa", 0.8, "4,3");
  }
  frame.legend(legend);
  ensureDir(job.out);
  fs.writeFileSync(job.out, frame.render());
  return { out: job.out, slopes };
}

export function runJob(job: PlotJob): string {
  switch (job.kind) {
    case "line1d":
      return plotLine1d(job);
    case "field2d":
      return plotField2d(job);
    case "rates":
      return plotRates(job).out;
    default:
      throw new Error(`unknown job kind ${(job as { kind: string }).kind}`);
  }
}
