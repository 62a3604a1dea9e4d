import * as fs from "node:fs";
import * as os from "node:os";
import * as path from "node:path";

import { describe, expect, it } from "vitest";

import { fitSlope, plotLine1d, plotRates } from "../src/plots.js";

function tmpDir(): string {
  return fs.mkdtempSync(path.join(os.tmpdir(), "gasdyn-fig-"));
}

function writeSnapshot1D(dir: string, name: string, scheme: string,
                         xs: number[], rho: (x: number) => number): string {
  const lines = [
    "# gasdyn snapshot",
    "# problem 2",
    `# scheme ${scheme}`,
    "# order 1",
    "# time 0.2",
    "# gamma 1.4",
    `# mesh ${xs.length}`,
    "# columns x rho u p E",
  ];
  for (const x of xs) {
    lines.push(`${x} ${rho(x)} 0.1 1 2.5`);
  }
  const p = path.join(dir, name);
  fs.writeFileSync(p, lines.join("\n") + "\n");
  return p;
}

function writeTable(dir: string, name: string, mesh: number[],
                    error: number[]): string {
  const lines = ["# gasdyn error table", "# problem 1", "# scheme hll",
                 "# order 1", "mesh l1_error rate"];
  mesh.forEach((m, i) => lines.push(`${m} ${error[i].toExponential(6)} -`));
  const p = path.join(dir, name);
  fs.writeFileSync(p, lines.join("\n") + "\n");
  return p;
}

describe("fitSlope", () => {
  it("recovers exact power laws", () => {
    const mesh = [100, 200, 400];
    for (const p of [1, 2, 3, 5]) {
      const err = mesh.map((m) => 7.3 * Math.pow(m, -p));
      expect(fitSlope(mesh, err)).toBeCloseTo(p, 10);
    }
  });

  it("rejects single-point series", () => {
    expect(() => fitSlope([100], [1e-3])).toThrow(/at least 2/);
  });
});

describe("plotLine1d", () => {
  it("renders series and respects the zoom window", () => {
    const dir = tmpDir();
    const xs = Array.from({ length: 100 }, (_, i) => (i + 0.5) / 100);
    const f = (x: number) => (x < 0.52 ? 1.4 : 1.0);
    const a = writeSnapshot1D(dir, "a.dat", "hll", xs, f);
    const b = writeSnapshot1D(dir, "b.dat", "ldcu", xs, f);
    const full = plotLine1d({ kind: "line1d", inputs: [a, b],
                              out: path.join(dir, "full.svg") });
    const zoom = plotLine1d({ kind: "line1d", inputs: [a, b],
                              zoom: [0.42, 0.62],
                              out: path.join(dir, "zoom.svg") });
    const fullSvg = fs.readFileSync(full, "utf8");
    const zoomSvg = fs.readFileSync(zoom, "utf8");
    const count = (s: string) => (s.match(/<circle/g) ?? []).length;
    // the zoom pane drops the points outside [0.42, 0.62]
    expect(count(zoomSvg)).toBeLessThan(count(fullSvg));
    expect(count(zoomSvg)).toBe(2 * 20 + 2); // 20 cells in window + legend dots
    expect(zoomSvg).toContain("0.45");
    expect(zoomSvg).not.toContain(">0.2<");
    expect(fullSvg).toContain("hll");
    expect(fullSvg).toContain("ldcu");
  });

  it("draws the reference as a line", () => {
    const dir = tmpDir();
    const xs = [0.25, 0.5, 0.75];
    const a = writeSnapshot1D(dir, "a.dat", "hll", xs, () => 1.0);
    const r = writeSnapshot1D(dir, "r.dat", "exact", xs, () => 1.0);
    const out = plotLine1d({ kind: "line1d", inputs: [a], reference: r,
                             out: path.join(dir, "ref.svg") });
    const svg = fs.readFileSync(out, "utf8");
    expect(svg).toContain("<polyline");
    expect(svg).toContain("reference");
  });

  it("rejects an empty series list", () => {
    expect(() => plotLine1d({ kind: "line1d", inputs: [], out: "x.svg" }))
      .toThrow(/empty series/);
  });

  it("rejects a degenerate zoom window", () => {
    const dir = tmpDir();
    const a = writeSnapshot1D(dir, "a.dat", "hll", [0.5], () => 1.0);
    expect(() => plotLine1d({ kind: "line1d", inputs: [a], zoom: [0.6, 0.4],
                              out: path.join(dir, "z.svg") }))
      .toThrow(/zoom/);
  });
});

describe("plotRates", () => {
  it("fits slopes near the underlying order", () => {
    const dir = tmpDir();
    const mesh = [100, 200, 400];
    const t1 = writeTable(dir, "o1.dat", mesh, mesh.map((m) => 1.0 / m));
    const t3 = writeTable(dir, "o3.dat", mesh, mesh.map((m) => 50 / m ** 3));
    const { out, slopes } = plotRates({ kind: "rates", tables: [t1, t3],
                                        out: path.join(dir, "rates.svg") });
    expect(slopes[0]).toBeCloseTo(1.0, 6);
    expect(slopes[1]).toBeCloseTo(3.0, 6);
    const svg = fs.readFileSync(out, "utf8");
    // log-log axes with decade ticks and the dashed reference slopes
    expect(svg).toContain("1e-");
    expect(svg).toContain("stroke-dasharray");
  });

  it("rejects an empty table list", () => {
    expect(() => plotRates({ kind: "rates", tables: [], out: "r.svg" }))
      .toThrow(/no tables/);
  });
});
