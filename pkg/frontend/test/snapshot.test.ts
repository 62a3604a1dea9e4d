import * as fs from "node:fs";
import * as os from "node:os";
import * as path from "node:path";

import { describe, expect, it } from "vitest";

import { readErrorTable, readSnapshot1D, readSnapshot2D } from "../src/snapshot.js";

function tmpFile(name: string, content: string): string {
  const dir = fs.mkdtempSync(path.join(os.tmpdir(), "gasdyn-fig-"));
  const p = path.join(dir, name);
  fs.writeFileSync(p, content);
  return p;
}

const SNAP_1D = `# gasdyn snapshot
# problem 2
# scheme hll
# order 1
# time 0.2
# gamma 1.4
# mesh 4
# columns x rho u p E
0.125 1.4 0.1 1 2.507
0.375 1.4 0.1 1 2.507
0.625 1 0.1 1 2.505
0.875 1 0.1 1 2.505
`;

const SNAP_2D = `# gasdyn snapshot
# problem 7
# scheme ldcu
# order 2
# time 0.1
# gamma 1.4
# mesh 2x3
# columns x y rho u v p E
0.25 0.125 1.0 1 -0.7 1 3.2
0.25 0.375 1.1 1 -0.7 1 3.3
0.25 0.625 1.2 1 -0.7 1 3.4
0.75 0.125 2.0 1 -0.7 1 4.2
0.75 0.375 2.1 1 -0.7 1 4.3
0.75 0.625 2.2 1 -0.7 1 4.4
`;

const TABLE = `# gasdyn error table
# problem 1
# scheme hll
# order 1
# variable rho
mesh l1_error rate
100 9.91e-03 -
200 4.98e-03 0.992
400 2.50e-03 0.996
`;

describe("snapshot parsing", () => {
  it("reads a 1-D snapshot with header metadata", () => {
    const snap = readSnapshot1D(tmpFile("a.dat", SNAP_1D));
    expect(snap.header["scheme"]).toBe("hll");
    expect(snap.header["time"]).toBe("0.2");
    expect(snap.x).toEqual([0.125, 0.375, 0.625, 0.875]);
    expect(snap.rho).toEqual([1.4, 1.4, 1, 1]);
    expect(snap.E[0]).toBeCloseTo(2.507, 12);
  });

  it("reads a 2-D snapshot into a grid", () => {
    const snap = readSnapshot2D(tmpFile("b.dat", SNAP_2D));
    expect(snap.nx).toBe(2);
    expect(snap.ny).toBe(3);
    expect(snap.x).toEqual([0.25, 0.75]);
    expect(snap.y).toEqual([0.125, 0.375, 0.625]);
    expect(snap.rho[1][2]).toBeCloseTo(2.2);
  });

  it("rejects mismatched formats", () => {
    expect(() => readSnapshot2D(tmpFile("c.dat", SNAP_1D))).toThrow(/not a 2-D/);
    expect(() => readSnapshot1D(tmpFile("d.dat", SNAP_2D))).toThrow(/not a 1-D/);
  });

  it("rejects truncated 2-D data", () => {
    const truncated = SNAP_2D.split("\n").slice(0, -2).join("\n") + "\n";
    expect(() => readSnapshot2D(tmpFile("e.dat", truncated))).toThrow(/expected 6 rows/);
  });
});

describe("error tables", () => {
  it("reads meshes, errors, and rates", () => {
    const t = readErrorTable(tmpFile("t.dat", TABLE));
    expect(t.mesh).toEqual([100, 200, 400]);
    expect(t.error[0]).toBeCloseTo(9.91e-3, 12);
    expect(t.rate[0]).toBeNull();
    expect(t.rate[1]).toBeCloseTo(0.992);
    expect(t.header["scheme"]).toBe("hll");
  });

  it("rejects empty tables", () => {
    expect(() => readErrorTable(tmpFile("u.dat", "# gasdyn error table\n"))).toThrow(/empty/);
  });
});
