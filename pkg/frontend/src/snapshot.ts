/**
 * Readers for the solver's plain-text output formats: field snapshots
 * ("# key value" headers + row-major records) and error/rate tables.
 */

import * as fs from "node:fs";

export interface SnapshotHeader {
  [key: string]: string;
}

export interface Snapshot1D {
  header: SnapshotHeader;
  x: number[];
  rho: number[];
  u: number[];
  p: number[];
  E: number[];
}

export interface Snapshot2D {
  header: SnapshotHeader;
  nx: number;
  ny: number;
  x: number[];   // nx distinct cell centers
  y: number[];   // ny distinct cell centers
  /** rho[i][j] at (x[i], y[j]) */
  rho: number[][];
}

function parseLines(path: string): { header: SnapshotHeader; rows: number[][] } {
  const header: SnapshotHeader = {};
  const rows: number[][] = [];
  const text = fs.readFileSync(path, "utf8");
  for (const raw of text.split("\n")) {
    const line = raw.trim();
    if (!line) continue;
    if (line.startsWith("#")) {
      const body = line.slice(1).trim();
      const sp = body.indexOf(" ");
      if (sp > 0) header[body.slice(0, sp)] = body.slice(sp + 1).trim();
      continue;
    }
    rows.push(line.split(/\s+/).map(Number));
  }
  return { header, rows };
}

export function readSnapshot1D(path: string): Snapshot1D {
  const { header, rows } = parseLines(path);
  const cols = (header["columns"] ?? "").split(/\s+/);
  if (cols.join(" ") !== "x rho u p E") {
    throw new Error(`${path}: not a 1-D snapshot (columns: ${header["columns"]})`);
  }
  return {
    header,
    x: rows.map((r) => r[0]),
    rho: rows.map((r) => r[1]),
    u: rows.map((r) => r[2]),
    p: rows.map((r) => r[3]),
    E: rows.map((r) => r[4]),
  };
}

export function readSnapshot2D(path: string): Snapshot2D {
  const { header, rows } = parseLines(path);
  const cols = (header["columns"] ?? "").split(/\s+/);
  if (cols.join(" ") !== "x y rho u v p E") {
    throw new Error(`${path}: not a 2-D snapshot (columns: ${header["columns"]})`);
  }
  const mesh = header["mesh"] ?? "";
  const m = mesh.match(/^(\d+)x(\d+)$/);
  if (!m) throw new Error(`${path}: missing 2-D mesh header (got "${mesh}")`);
  const nx = Number(m[1]);
  const ny = Number(m[2]);
  if (rows.length !== nx * ny) {
    throw new Error(`${path}: expected ${nx * ny} rows, found ${rows.length}`);
  }
  const x: number[] = [];
  const y: number[] = [];
  const rho: number[][] = [];
  for (let i = 0; i < nx; i++) {
    x.push(rows[i * ny][0]);
    const col: number[] = [];
    for (let j = 0; j < ny; j++) col.push(rows[i * ny + j][2]);
    rho.push(col);
  }
  for (let j = 0; j < ny; j++) y.push(rows[j][1]);
  return { header, nx, ny, x, y, rho };
}

export interface RateTable {
  header: SnapshotHeader;
  mesh: number[];
  error: number[];
  rate: (number | null)[];
}

export function readErrorTable(path: string): RateTable {
  const header: SnapshotHeader = {};
  const mesh: number[] = [];
  const error: number[] = [];
  const rate: (number | null)[] = [];
  const text = fs.readFileSync(path, "utf8");
  for (const raw of text.split("\n")) {
    const line = raw.trim();
    if (!line || line.startsWith("mesh ")) continue;
    if (line.startsWith("#")) {
      const body = line.slice(1).trim();
      const sp = body.indexOf(" ");
      if (sp > 0) header[body.slice(0, sp)] = body.slice(sp + 1).trim();
      continue;
    }
    const [m, e, r] = line.split(/\s+/);
    mesh.push(Number(m));
    error.push(Number(e));
    rate.push(r === "-" ? null : Number(r));
  }
  if (mesh.length === 0) throw new Error(`${path}: empty error table`);
  return { header, mesh, error, rate };
}
