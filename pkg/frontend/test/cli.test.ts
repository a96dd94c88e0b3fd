import { mkdtempSync, readFileSync, writeFileSync, existsSync } from "node:fs";
import { tmpdir } from "node:os";
import { join } from "node:path";
import { afterEach, beforeEach, describe, expect, it, vi } from "vitest";

import { CSV_HEADER } from "../src/csv.js";
import { main } from "../src/cli.js";

const SCAN = [
  CSV_HEADER,
  "0.125,0,2.0,1.4,SEPARABLE",
  "0.125,0.3,1.9,1.2,SEPARABLE",
  "0.125,0.6,1.8,0.9,ENTANGLED",
  "",
].join("\n");

const GRID = [
  CSV_HEADER,
  "0,0,1.5,1.2,SEPARABLE",
  "0,0.3,1.5,0.8,ENTANGLED",
  "0.3,0,0.8,0.7,NONPHYSICAL",
  "0.3,0.3,nan,nan,OUT_OF_DOMAIN",
  "",
].join("\n");

describe("cli", () => {
  let dir: string;

  beforeEach(() => {
    dir = mkdtempSync(join(tmpdir(), "ncgauss-figures-"));
    vi.spyOn(console, "log").mockImplementation(() => {});
    vi.spyOn(console, "error").mockImplementation(() => {});
  });

  afterEach(() => {
    vi.restoreAllMocks();
  });

  it("renders curves end to end", () => {
    const csv = join(dir, "scan.csv");
    const out = join(dir, "curves.svg");
    writeFileSync(csv, SCAN);
    expect(main(["render", "--mode", "curves", "--csv", csv, "--out", out])).toBe(0);
    const svg = readFileSync(out, "utf8");
    expect(svg.startsWith("<svg")).toBe(true);
    expect(svg).toContain("polyline");
  });

  it("renders regions end to end with positional csv paths", () => {
    const csv = join(dir, "grid.csv");
    const out = join(dir, "regions.svg");
    writeFileSync(csv, GRID);
    expect(main(["render", "--mode", "regions", "--out", out, csv])).toBe(0);
    expect(readFileSync(out, "utf8")).toContain('fill="#d62728"');
  });

  it("aborts on a reclassification mismatch without writing output", () => {
    const csv = join(dir, "bad.csv");
    const out = join(dir, "never.svg");
    writeFileSync(csv, [CSV_HEADER, "0,0,1.5,0.5,SEPARABLE", ""].join("\n"));
    expect(main(["render", "--mode", "regions", "--csv", csv, "--out", out])).toBe(1);
    expect(existsSync(out)).toBe(false);
    expect(vi.mocked(console.error).mock.calls[0][0]).toMatch(/disagrees with recomputed/);
  });

  it("rejects unknown modes and missing arguments", () => {
    const csv = join(dir, "scan.csv");
    writeFileSync(csv, SCAN);
    expect(main(["render", "--mode", "sparkline", "--csv", csv, "--out", join(dir, "x.svg")])).toBe(1);
    expect(main(["render", "--mode", "curves"])).toBe(2);
  });

  it("reports missing input files", () => {
    expect(main(["render", "--mode", "curves", "--csv", join(dir, "nope.csv"),
                 "--out", join(dir, "x.svg")])).toBe(1);
  });

  it("produces identical bytes across runs", () => {
    const csv = join(dir, "grid.csv");
    writeFileSync(csv, GRID);
    const first = join(dir, "a.svg");
    const second = join(dir, "b.svg");
    expect(main(["render", "--mode", "regions", "--csv", csv, "--out", first])).toBe(0);
    expect(main(["render", "--mode", "regions", "--csv", csv, "--out", second])).toBe(0);
    expect(readFileSync(first, "utf8")).toBe(readFileSync(second, "utf8"));
  });
});
