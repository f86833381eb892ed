#!/usr/bin/env node
/** Train and evaluate the sentence-pair probes on audit outputs. */

import * as fs from "fs";
import yargs from "yargs";
import { hideBin } from "yargs/helpers";

import { loadManifest, loadPairs } from "./data.js";
import { initFromGlove } from "./embeddings.js";
import { ProbeModel } from "./models.js";
import { DEFAULT_TRAIN, TrainConfig, trainProbe } from "./train.js";
import { buildResults, evaluateSubsets } from "./evaluate.js";

yargs(hideBin(process.argv))
  .command(
    "train",
    "train a probe on generic-jsonl splits",
    (y) => y
      .option("model", { choices: ["parallel", "sequential"] as const, demandOption: true })
      .option("train", { type: "string", demandOption: true, describe: "train jsonl" })
      .option("dev", { type: "string", describe: "dev jsonl for model selection" })
      .option("out", { type: "string", demandOption: true, describe: "model file" })
      .option("embedding-dim", { type: "number", default: DEFAULT_TRAIN.embeddingDim })
      .option("hidden-dim", { type: "number", default: DEFAULT_TRAIN.hiddenDim })
      .option("epochs", { type: "number", default: DEFAULT_TRAIN.epochs })
      .option("batch", { type: "number", default: DEFAULT_TRAIN.batchSize })
      .option("lr", { type: "number", default: DEFAULT_TRAIN.learningRate })
      .option("seed", { type: "number", default: DEFAULT_TRAIN.seed })
      .option("limit", { type: "number", describe: "train on the first N pairs" })
      .option("glove", { type: "string",
                         describe: "GloVe text file to initialize embeddings" }),
    async (argv) => {
      const config: TrainConfig = {
        kind: argv.model,
        embeddingDim: argv["embedding-dim"],
        hiddenDim: argv["hidden-dim"],
        epochs: argv.epochs,
        batchSize: argv.batch,
        learningRate: argv.lr,
        seed: argv.seed,
        trainLimit: argv.limit,
      };
      const train = loadPairs(argv.train);
      const dev = argv.dev ? loadPairs(argv.dev) : [];
      const result = await trainProbe(config, train, dev, argv.glove
        ? async (model) => {
            const covered = await initFromGlove(model, argv.glove!);
            console.error(`glove covered ${covered}/${model.vocab.size} words`);
          }
        : undefined);
      fs.writeFileSync(argv.out, JSON.stringify(result.model.toJSON()));
      console.error(`best epoch ${result.bestEpoch}; wrote ${argv.out}`);
    },
  )
  .command(
    "eval",
    "evaluate a trained probe on full/easy/hard (and masked) test sets",
    (y) => y
      .option("model-file", { type: "string", demandOption: true })
      .option("test", { type: "string", demandOption: true, describe: "test jsonl" })
      .option("manifest", { type: "string", demandOption: true,
                            describe: "partition.txt from the audit" })
      .option("masked", { type: "string", describe: "masked.jsonl from the audit" })
      .option("out", { type: "string", demandOption: true, describe: "results json" }),
    (argv) => {
      const model = ProbeModel.fromJSON(
        JSON.parse(fs.readFileSync(argv["model-file"], "utf-8")));
      const manifest = loadManifest(argv.manifest);
      const plain = evaluateSubsets(model, loadPairs(argv.test), manifest);
      const masked = argv.masked
        ? evaluateSubsets(model, loadPairs(argv.masked), manifest)
        : null;
      const results = buildResults(model, plain, masked);
      fs.writeFileSync(argv.out, JSON.stringify(results, null, 2) + "\n");
      console.log(JSON.stringify(results, null, 2));
    },
  )
  .demandCommand(1)
  .strict()
  .parse();
