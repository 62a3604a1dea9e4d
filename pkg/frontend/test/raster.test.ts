import { describe, expect, it } from "vitest";

import { colormap, decodePng, encodePng, rasterize } from "../src/raster.js";

describe("rasterize", () => {
  it("maps a symmetric field to a symmetric image", () => {
    const n = 16;
    const field: number[][] = [];
    for (let i = 0; i < n; i++) {
      const col: number[] = [];
      for (let j = 0; j < n; j++) {
        const dx = (i + 0.5) / n - 0.5;
        const dy = (j + 0.5) / n - 0.5;
        col.push(dx * dx + dy * dy < 0.09 ? 2.0 : 1.0);
      }
      field.push(col);
    }
    const { pixels, width, height } = rasterize(field);
    // transpose symmetry of the field shows as x/y mirror of the image
    for (let i = 0; i < n; i++) {
      for (let j = 0; j < n; j++) {
        // field[i][j] == field[j][i]; image row = height-1-j
        const rowA = height - 1 - j;
        const rowB = height - 1 - i;
        const pa = (rowA * width + i) * 3;
        const pb = (rowB * width + j) * 3;
        expect(pixels[pa]).toBe(pixels[pb]);
      }
    }
  });

  it("handles a constant field (degenerate color scale)", () => {
    const field = [[1.5, 1.5], [1.5, 1.5]];
    const { pixels, lo, hi } = rasterize(field);
    expect(lo).toBe(1.5);
    expect(hi).toBe(1.5);
    const mid = colormap(0.5);
    expect([pixels[0], pixels[1], pixels[2]]).toEqual(mid);
  });

  it("orients rows top-down", () => {
    // field larger at high y -> brighter color in the top image row
    const field = [[0.0, 1.0]];
    const { pixels } = rasterize(field);
    const top = colormap(1.0);
    const bottom = colormap(0.0);
    expect([pixels[0], pixels[1], pixels[2]]).toEqual(top);
    expect([pixels[3], pixels[4], pixels[5]]).toEqual(bottom);
  });
});

describe("png round trip", () => {
  it("encodes and decodes pixels exactly", () => {
    const w = 5;
    const h = 3;
    const px = new Uint8Array(w * h * 3);
    for (let i = 0; i < px.length; i++) px[i] = (i * 37) % 256;
    const buf = encodePng(px, w, h);
    // PNG signature
    expect([...buf.subarray(0, 4)]).toEqual([0x89, 0x50, 0x4e, 0x47]);
    const back = decodePng(buf);
    expect(back.width).toBe(w);
    expect(back.height).toBe(h);
    expect([...back.pixels]).toEqual([...px]);
  });

  it("validates dimensions", () => {
    expect(() => encodePng(new Uint8Array(10), 2, 2)).toThrow(/match/);
  });
});
