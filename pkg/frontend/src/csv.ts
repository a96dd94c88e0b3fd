/**
 * Reader for the sweep CSV schema:
 *
 *   theta,eta,nu_minus,nu_minus_prime,class
 *
 * Floats are shortest round-trip decimals; out-of-domain rows carry `nan`
 * invariants. Every parse error names the offending 1-based line number.
 */

export const CSV_HEADER = "theta,eta,nu_minus,nu_minus_prime,class";

export const ROW_CLASSES = ["NONPHYSICAL", "SEPARABLE", "ENTANGLED", "OUT_OF_DOMAIN"] as const;
export type RowClass = (typeof ROW_CLASSES)[number];

export interface SweepRow {
  theta: number;
  eta: number;
  nuMinus: number;
  nuMinusPrime: number;
  label: RowClass;
}

export interface SweepTable {
  source: string;
  rows: SweepRow[];
}

export class CsvError extends Error {}

const NUMBER_PATTERN = /^-?(\d+(\.\d+)?([eE][+-]?\d+)?|nan)$/;

function parseNumber(token: string, line: number, column: string, source: string): number {
  if (!NUMBER_PATTERN.test(token)) {
    throw new CsvError(`${source}:${line}: column ${column} has malformed number ${JSON.stringify(token)}`);
  }
  return token === "nan" ? Number.NaN : Number(token);
}

export function parseSweepCsv(text: string, source = "<csv>"): SweepTable {
  const lines = text.split("\n");
  if (lines.length > 0 && lines[lines.length - 1] === "") {
    lines.pop(); // trailing newline
  }
  if (lines.length === 0) {
    throw new CsvError(`${source}:1: empty file`);
  }
  if (lines[0] !== CSV_HEADER) {
    throw new CsvError(`${source}:1: expected header ${JSON.stringify(CSV_HEADER)}, got ${JSON.stringify(lines[0])}`);
  }
  if (lines.length === 1) {
    throw new CsvError(`${source}:1: no data rows`);
  }
  const rows: SweepRow[] = [];
  for (let i = 1; i < lines.length; i++) {
    const lineNumber = i + 1;
    const parts = lines[i].split(",");
    if (parts.length !== 5) {
      throw new CsvError(`${source}:${lineNumber}: expected 5 columns, got ${parts.length}`);
    }
    const [thetaTok, etaTok, nuTok, nuPrimeTok, label] = parts;
    const theta = parseNumber(thetaTok, lineNumber, "theta", source);
    const eta = parseNumber(etaTok, lineNumber, "eta", source);
    if (!Number.isFinite(theta) || !Number.isFinite(eta)) {
      throw new CsvError(`${source}:${lineNumber}: theta and eta must be finite`);
    }
    if (!(ROW_CLASSES as readonly string[]).includes(label)) {
      throw new CsvError(`${source}:${lineNumber}: unknown class ${JSON.stringify(label)}`);
    }
    rows.push({
      theta,
      eta,
      nuMinus: parseNumber(nuTok, lineNumber, "nu_minus", source),
      nuMinusPrime: parseNumber(nuPrimeTok, lineNumber, "nu_minus_prime", source),
      label: label as RowClass,
    });
  }
  return { source, rows };
}

/** The producer's classification rule, recomputed from the invariant columns. */
export function expectedClass(nuMinus: number, nuMinusPrime: number): RowClass {
  if (Number.isNaN(nuMinus) || Number.isNaN(nuMinusPrime)) {
    return "OUT_OF_DOMAIN";
  }
  if (nuMinus < 1.0) {
    return "NONPHYSICAL";
  }
  return nuMinusPrime >= 1.0 ? "SEPARABLE" : "ENTANGLED";
}

/**
 * Rendering never reclassifies: verify that every stored class agrees with
 * the one recomputed from the nu columns, or abort naming the first bad row.
 */
export function auditClassification(table: SweepTable): void {
  table.rows.forEach((row, index) => {
    const recomputed = expectedClass(row.nuMinus, row.nuMinusPrime);
    if (recomputed !== row.label) {
      throw new CsvError(
        `${table.source}:${index + 2}: class ${row.label} disagrees with ` +
        `recomputed ${recomputed} (nu_minus=${row.nuMinus}, nu_minus_prime=${row.nuMinusPrime})`);
    }
  });
}
