/**
 * render --mode curves|regions --csv PATH... --out PATH
 *
 * Reads sweep CSVs, verifies that every row's class matches the one
 * recomputed from its invariant columns, and writes one SVG sheet.
 */

import { readFileSync, writeFileSync } from "node:fs";
import { parseArgs } from "node:util";

import { CsvError, SweepTable, auditClassification, parseSweepCsv } from "./csv.js";
import { CURVE_DEFAULTS, renderCurves } from "./curves.js";
import { REGION_DEFAULTS, renderRegions } from "./regions.js";

export function render(mode: string, tables: SweepTable[], panelWidth?: number, panelHeight?: number): string {
  for (const table of tables) {
    auditClassification(table);
  }
  if (mode === "curves") {
    const options = { ...CURVE_DEFAULTS };
    if (panelWidth) options.panelWidth = panelWidth;
    if (panelHeight) options.panelHeight = panelHeight;
    return renderCurves(tables, options);
  }
  if (mode === "regions") {
    const options = { ...REGION_DEFAULTS };
    if (panelWidth) options.panelWidth = panelWidth;
    if (panelHeight) options.panelHeight = panelHeight;
    return renderRegions(tables, options);
  }
  throw new CsvError(`unknown mode ${JSON.stringify(mode)}; expected "curves" or "regions"`);
}

export function main(argv: string[]): number {
  let parsed;
  try {
    parsed = parseArgs({
      args: argv,
      allowPositionals: true,
      options: {
        mode: { type: "string" },
        csv: { type: "string", multiple: true },
        out: { type: "string" },
        "panel-width": { type: "string" },
        "panel-height": { type: "string" },
      },
    });
  } catch (error) {
    console.error(`error: ${(error as Error).message}`);
    return 2;
  }
  const positionals = [...parsed.positionals];
  if (positionals[0] === "render") {
    positionals.shift();
  }
  const paths = [...(parsed.values.csv ?? []), ...positionals];
  const mode = parsed.values.mode;
  const out = parsed.values.out;
  if (!mode || !out || paths.length === 0) {
    console.error("usage: render --mode curves|regions --csv PATH [--csv PATH ...] --out PATH");
    return 2;
  }
  try {
    const tables = paths.map((path) => parseSweepCsv(readFileSync(path, "utf8"), path));
    const width = parsed.values["panel-width"] ? Number(parsed.values["panel-width"]) : undefined;
    const height = parsed.values["panel-height"] ? Number(parsed.values["panel-height"]) : undefined;
    const svg = render(mode, tables, width, height);
    writeFileSync(out, svg);
    console.log(out);
    return 0;
  } catch (error) {
    if (error instanceof CsvError) {
      console.error(`error: ${error.message}`);
      return 1;
    }
    if (error instanceof Error && "code" in error) {
      console.error(`i/o error: ${error.message}`);
      return 1;
    }
    throw error;
  }
}

if (process.argv[1] && import.meta.url.endsWith(process.argv[1].split("/").pop()!)) {
  process.exit(main(process.argv.slice(2)));
}
