/** Optional pretrained-embedding initialization from a GloVe-format text file. */

import * as fs from "fs";
import * as readline from "readline";
import { ProbeModel } from "./models.js";

/**
 * Overwrite embedding rows for vocabulary words found in the file
 * ("word v1 v2 ... vD" per line). Returns the number of rows initialized.
 * The unknown row and uncovered words keep their random initialization.
 */
export async function initFromGlove(model: ProbeModel, path: string): Promise<number> {
  const dim = model.config.embeddingDim;
  let covered = 0;
  const lines = readline.createInterface({
    input: fs.createReadStream(path, { encoding: "utf-8" }),
    crlfDelay: Infinity,
  });
  for await (const line of lines) {
    if (!line) continue;
    const space = line.indexOf(" ");
    const word = line.slice(0, space);
    const idx = model.vocab.index.get(word);
    if (idx === undefined) continue;
    const values = line.slice(space + 1).split(" ");
    if (values.length !== dim) {
      throw new Error(`embedding dimension mismatch: file has ${values.length}, ` +
        `model expects ${dim}`);
    }
    for (let j = 0; j < dim; j++) {
      model.We.w[idx * dim + j] = parseFloat(values[j]);
    }
    covered++;
  }
  return covered;
}
