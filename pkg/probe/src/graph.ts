/** Tape-based reverse-mode autodiff over Mat operations. */

import { Mat } from "./mat.js";

export class Graph {
  private backprop: Array<() => void> = [];
  needsBackprop: boolean;

  constructor(needsBackprop = true) {
    this.needsBackprop = needsBackprop;
  }

  backward(): void {
    for (let i = this.backprop.length - 1; i >= 0; i--) {
      this.backprop[i]();
    }
  }

  /** out = m[row, :] as a column vector (embedding lookup). */
  rowPluck(m: Mat, row: number): Mat {
    if (row < 0 || row >= m.rows) throw new Error(`row ${row} out of range`);
    const out = new Mat(m.cols, 1);
    for (let i = 0; i < m.cols; i++) out.w[i] = m.w[row * m.cols + i];
    if (this.needsBackprop) {
      this.backprop.push(() => {
        for (let i = 0; i < m.cols; i++) m.dw[row * m.cols + i] += out.dw[i];
      });
    }
    return out;
  }

  mul(a: Mat, b: Mat): Mat {
    if (a.cols !== b.rows) {
      throw new Error(`mul shape mismatch: ${a.rows}x${a.cols} * ${b.rows}x${b.cols}`);
    }
    const out = new Mat(a.rows, b.cols);
    for (let i = 0; i < a.rows; i++) {
      for (let k = 0; k < a.cols; k++) {
        const av = a.w[i * a.cols + k];
        if (av === 0) continue;
        for (let j = 0; j < b.cols; j++) {
          out.w[i * b.cols + j] += av * b.w[k * b.cols + j];
        }
      }
    }
    if (this.needsBackprop) {
      this.backprop.push(() => {
        for (let i = 0; i < a.rows; i++) {
          for (let j = 0; j < b.cols; j++) {
            const grad = out.dw[i * b.cols + j];
            if (grad === 0) continue;
            for (let k = 0; k < a.cols; k++) {
              a.dw[i * a.cols + k] += grad * b.w[k * b.cols + j];
              b.dw[k * b.cols + j] += grad * a.w[i * a.cols + k];
            }
          }
        }
      });
    }
    return out;
  }

  add(a: Mat, b: Mat): Mat {
    if (a.w.length !== b.w.length) throw new Error("add shape mismatch");
    const out = new Mat(a.rows, a.cols);
    for (let i = 0; i < a.w.length; i++) out.w[i] = a.w[i] + b.w[i];
    if (this.needsBackprop) {
      this.backprop.push(() => {
        for (let i = 0; i < a.w.length; i++) {
          a.dw[i] += out.dw[i];
          b.dw[i] += out.dw[i];
        }
      });
    }
    return out;
  }

  eltmul(a: Mat, b: Mat): Mat {
    if (a.w.length !== b.w.length) throw new Error("eltmul shape mismatch");
    const out = new Mat(a.rows, a.cols);
    for (let i = 0; i < a.w.length; i++) out.w[i] = a.w[i] * b.w[i];
    if (this.needsBackprop) {
      this.backprop.push(() => {
        for (let i = 0; i < a.w.length; i++) {
          a.dw[i] += b.w[i] * out.dw[i];
          b.dw[i] += a.w[i] * out.dw[i];
        }
      });
    }
    return out;
  }

  tanh(a: Mat): Mat {
    const out = new Mat(a.rows, a.cols);
    for (let i = 0; i < a.w.length; i++) out.w[i] = Math.tanh(a.w[i]);
    if (this.needsBackprop) {
      this.backprop.push(() => {
        for (let i = 0; i < a.w.length; i++) {
          a.dw[i] += (1 - out.w[i] * out.w[i]) * out.dw[i];
        }
      });
    }
    return out;
  }

  sigmoid(a: Mat): Mat {
    const out = new Mat(a.rows, a.cols);
    for (let i = 0; i < a.w.length; i++) out.w[i] = 1 / (1 + Math.exp(-a.w[i]));
    if (this.needsBackprop) {
      this.backprop.push(() => {
        for (let i = 0; i < a.w.length; i++) {
          a.dw[i] += out.w[i] * (1 - out.w[i]) * out.dw[i];
        }
      });
    }
    return out;
  }

  /** Vertical concatenation of column vectors. */
  concat(a: Mat, b: Mat): Mat {
    if (a.cols !== 1 || b.cols !== 1) throw new Error("concat expects column vectors");
    const out = new Mat(a.rows + b.rows, 1);
    out.w.set(a.w, 0);
    out.w.set(b.w, a.rows);
    if (this.needsBackprop) {
      this.backprop.push(() => {
        for (let i = 0; i < a.rows; i++) a.dw[i] += out.dw[i];
        for (let i = 0; i < b.rows; i++) b.dw[i] += out.dw[a.rows + i];
      });
    }
    return out;
  }
}

/** Numerically stable softmax of a column vector; outside the tape. */
export function softmax(logits: Mat): number[] {
  let max = -Infinity;
  for (const value of logits.w) max = Math.max(max, value);
  const exps = Array.from(logits.w, (value) => Math.exp(value - max));
  const total = exps.reduce((s, v) => s + v, 0);
  return exps.map((v) => v / total);
}
