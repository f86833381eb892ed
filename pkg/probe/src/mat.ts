/** Dense matrices with gradient buffers, plus a seeded RNG. */

export class Mat {
  rows: number;
  cols: number;
  w: Float64Array;
  dw: Float64Array;

  constructor(rows: number, cols: number) {
    this.rows = rows;
    this.cols = cols;
    this.w = new Float64Array(rows * cols);
    this.dw = new Float64Array(rows * cols);
  }

  get(row: number, col: number): number {
    return this.w[row * this.cols + col];
  }

  set(row: number, col: number, value: number): void {
    this.w[row * this.cols + col] = value;
  }

  zeroGrad(): void {
    this.dw.fill(0);
  }

  clone(): Mat {
    const out = new Mat(this.rows, this.cols);
    out.w.set(this.w);
    return out;
  }

  toJSON(): { rows: number; cols: number; w: number[] } {
    return { rows: this.rows, cols: this.cols, w: Array.from(this.w) };
  }

  static fromJSON(doc: { rows: number; cols: number; w: number[] }): Mat {
    const out = new Mat(doc.rows, doc.cols);
    out.w.set(doc.w);
    return out;
  }
}

/** mulberry32: small deterministic PRNG, good enough for init and shuffling. */
export class Rng {
  private state: number;

  constructor(seed: number) {
    this.state = seed >>> 0;
  }

  next(): number {
    this.state = (this.state + 0x6d2b79f5) >>> 0;
    let t = this.state;
    t = Math.imul(t ^ (t >>> 15), t | 1);
    t ^= t + Math.imul(t ^ (t >>> 7), t | 61);
    return ((t ^ (t >>> 14)) >>> 0) / 4294967296;
  }

  uniform(lo: number, hi: number): number {
    return lo + (hi - lo) * this.next();
  }

  int(maxExclusive: number): number {
    return Math.floor(this.next() * maxExclusive);
  }

  shuffle<T>(items: T[]): void {
    for (let i = items.length - 1; i > 0; i--) {
      const j = this.int(i + 1);
      [items[i], items[j]] = [items[j], items[i]];
    }
  }
}

export function randMat(rows: number, cols: number, rng: Rng, scale = 0.08): Mat {
  const out = new Mat(rows, cols);
  for (let i = 0; i < out.w.length; i++) {
    out.w[i] = rng.uniform(-scale, scale);
  }
  return out;
}
