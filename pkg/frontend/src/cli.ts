/** Figure rendering entry point: --input table.csv --kind <kind> --output fig.svg */

import { mkdirSync, readFileSync, writeFileSync } from "node:fs";
import { dirname } from "node:path";
import { pathToFileURL } from "node:url";
import { parseArgs } from "node:util";

import { MissingColumnError, parseCsv } from "./csv.js";
import { FIGURE_KINDS, FigureKind, buildFigure } from "./figures.js";
import { RenderOptions, renderLineChart } from "./svg.js";

export const EXIT_OK = 0;
export const EXIT_USAGE = 1;
export const EXIT_SCHEMA = 2;

const USAGE =
  "usage: irsim-plots --input <table.csv> --kind " +
  `<${FIGURE_KINDS.join("|")}> --output <figure.svg> ` +
  "[--title t] [--x-range lo,hi] [--y-range lo,hi]";

function parseRange(text: string): [number, number] {
  const parts = text.split(",").map(Number);
  if (parts.length !== 2 || parts.some((v) => !Number.isFinite(v))) {
    throw new Error(`expected lo,hi — got '${text}'`);
  }
  return [parts[0], parts[1]];
}

export function main(argv: string[]): number {
  let values;
  try {
    values = parseArgs({
      args: argv,
      options: {
        input: { type: "string" },
        kind: { type: "string" },
        output: { type: "string" },
        title: { type: "string" },
        "x-range": { type: "string" },
        "y-range": { type: "string" },
      },
    }).values;
  } catch (error) {
    console.error(String(error));
    console.error(USAGE);
    return EXIT_USAGE;
  }

  const { input, kind, output } = values;
  if (!input || !kind || !output) {
    console.error(USAGE);
    return EXIT_USAGE;
  }
  if (!FIGURE_KINDS.includes(kind as FigureKind)) {
    console.error(`unknown figure kind '${kind}'`);
    console.error(USAGE);
    return EXIT_USAGE;
  }

  let text: string;
  try {
    text = readFileSync(input, "utf8");
  } catch (error) {
    console.error(`cannot read ${input}: ${String(error)}`);
    return EXIT_USAGE;
  }

  const options: RenderOptions = { title: values.title };
  try {
    if (values["x-range"]) options.xRange = parseRange(values["x-range"]);
    if (values["y-range"]) options.yRange = parseRange(values["y-range"]);
  } catch (error) {
    console.error(String(error));
    return EXIT_USAGE;
  }

  try {
    const figure = buildFigure(kind as FigureKind, parseCsv(text));
    const svg = renderLineChart(figure, options);
    mkdirSync(dirname(output), { recursive: true });
    writeFileSync(output, svg);
  } catch (error) {
    if (error instanceof MissingColumnError) {
      console.error(`schema mismatch for kind '${kind}': ${error.message}`);
      return EXIT_SCHEMA;
    }
    console.error(String(error));
    return EXIT_SCHEMA;
  }
  return EXIT_OK;
}

const invokedDirectly =
  process.argv[1] !== undefined &&
  import.meta.url === pathToFileURL(process.argv[1]).href;
if (invokedDirectly) {
  process.exit(main(process.argv.slice(2)));
}
