/**
 * Pseudocolor rasterization and a minimal PNG writer (zlib from node,
 * chunks and CRC by hand) so 2-D density maps come out as real raster
 * images instead of million-rect SVGs.
 */

import * as zlib from "node:zlib";

/** Anchors of a perceptually uniform colormap (viridis), RGB 0-255. */
const VIRIDIS: [number, number, number][] = [
  [68, 1, 84], [71, 24, 106], [72, 40, 120], [71, 56, 126],
  [66, 72, 132], [61, 86, 136], [55, 100, 139], [49, 113, 141],
  [44, 125, 142], [40, 137, 141], [36, 149, 139], [33, 161, 135],
  [34, 173, 128], [42, 184, 117], [60, 195, 102], [85, 205, 84],
  [115, 213, 61], [149, 219, 41], [184, 222, 31], [220, 222, 35],
  [253, 231, 37],
];

export function colormap(t: number): [number, number, number] {
  const x = Math.min(1, Math.max(0, t)) * (VIRIDIS.length - 1);
  const i = Math.min(VIRIDIS.length - 2, Math.floor(x));
  const f = x - i;
  const a = VIRIDIS[i];
  const b = VIRIDIS[i + 1];
  return [
    Math.round(a[0] + f * (b[0] - a[0])),
    Math.round(a[1] + f * (b[1] - a[1])),
    Math.round(a[2] + f * (b[2] - a[2])),
  ];
}

/**
 * Map field[i][j] (i: x index, j: y index) to RGB rows in image order
 * (top row = largest y).  A constant field maps to the middle of the
 * color scale.
 */
export function rasterize(field: number[][]): {
  pixels: Uint8Array;
  width: number;
  height: number;
  lo: number;
  hi: number;
} {
  const nx = field.length;
  const ny = field[0].length;
  let lo = Infinity;
  let hi = -Infinity;
  for (const col of field) {
    for (const v of col) {
      if (Number.isFinite(v)) {
        lo = Math.min(lo, v);
        hi = Math.max(hi, v);
      }
    }
  }
  const degenerate = !(hi > lo);
  const span = degenerate ? 1 : hi - lo;
  const pixels = new Uint8Array(nx * ny * 3);
  for (let row = 0; row < ny; row++) {
    const j = ny - 1 - row; // image rows top-down, y bottom-up
    for (let i = 0; i < nx; i++) {
      const t = degenerate ? 0.5 : (field[i][j] - lo) / span;
      const [r, g, b] = colormap(t);
      const off = (row * nx + i) * 3;
      pixels[off] = r;
      pixels[off + 1] = g;
      pixels[off + 2] = b;
    }
  }
  return { pixels, width: nx, height: ny, lo, hi };
}

const CRC_TABLE = (() => {
  const table = new Uint32Array(256);
  for (let n = 0; n < 256; n++) {
    let c = n;
    for (let k = 0; k < 8; k++) c = c & 1 ? 0xedb88320 ^ (c >>> 1) : c >>> 1;
    table[n] = c >>> 0;
  }
  return table;
})();

function crc32(buf: Uint8Array): number {
  let c = 0xffffffff;
  for (const b of buf) c = CRC_TABLE[(c ^ b) & 0xff] ^ (c >>> 8);
  return (c ^ 0xffffffff) >>> 0;
}

function chunk(type: string, data: Uint8Array): Buffer {
  const len = Buffer.alloc(4);
  len.writeUInt32BE(data.length, 0);
  const body = Buffer.concat([Buffer.from(type, "ascii"), Buffer.from(data)]);
  const tail = Buffer.alloc(4);
  tail.writeUInt32BE(crc32(body), 0);
  return Buffer.concat([len, body, tail]);
}

/** Encode 8-bit RGB pixels (row-major, top-down) as a PNG buffer. */
export function encodePng(pixels: Uint8Array, width: number, height: number): Buffer {
  if (pixels.length !== width * height * 3) {
    throw new Error("pixel buffer does not match dimensions");
  }
  const ihdr = Buffer.alloc(13);
  ihdr.writeUInt32BE(width, 0);
  ihdr.writeUInt32BE(height, 4);
  ihdr[8] = 8;   // bit depth
  ihdr[9] = 2;   // color type: truecolor
  const raw = Buffer.alloc(height * (1 + width * 3));
  for (let row = 0; row < height; row++) {
    raw[row * (1 + width * 3)] = 0; // filter: none
    pixels
      .subarray(row * width * 3, (row + 1) * width * 3)
      .forEach((v, i) => {
        raw[row * (1 + width * 3) + 1 + i] = v;
      });
  }
  const idat = zlib.deflateSync(raw, { level: 6 });
  return Buffer.concat([
    Buffer.from([0x89, 0x50, 0x4e, 0x47, 0x0d, 0x0a, 0x1a, 0x0a]),
    chunk("IHDR", ihdr),
    chunk("IDAT", idat),
    chunk("IEND", new Uint8Array(0)),
  ]);
}

/** Decode the pipeline's own PNGs (filter-0 truecolor) for testing. */
export function decodePng(buf: Buffer): {
  width: number;
  height: number;
  pixels: Uint8Array;
} {
  if (buf.readUInt32BE(12) !== 0x49484452) throw new Error("not an IHDR png");
  const width = buf.readUInt32BE(16);
  const height = buf.readUInt32BE(20);
  const chunks: Buffer[] = [];
  let off = 8;
  while (off < buf.length) {
    const len = buf.readUInt32BE(off);
    const type = buf.toString("ascii", off + 4, off + 8);
    if (type === "IDAT") chunks.push(buf.subarray(off + 8, off + 8 + len));
    off += 12 + len;
  }
  const raw = zlib.inflateSync(Buffer.concat(chunks));
  const pixels = new Uint8Array(width * height * 3);
  for (let row = 0; row < height; row++) {
    if (raw[row * (1 + width * 3)] !== 0) throw new Error("unexpected PNG filter");
    pixels.set(
      raw.subarray(row * (1 + width * 3) + 1, (row + 1) * (1 + width * 3)),
      row * width * 3,
    );
  }
  return { width, height, pixels };
}
