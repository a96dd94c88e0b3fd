/**
 * Region panels: class-colored heatmaps over a rectangular (theta, eta)
 * grid, one panel per input table, three panels per row.
 *
 * Colors follow the reference plots: gray separable, red entangled, black
 * nonphysical, white out of domain.  Runs of equal class along theta are
 * merged into single rectangles to keep the SVG small.
 */

import { CsvError, RowClass, SweepTable } from "./csv.js";
import { document, esc, fmt, linearScale, niceTicks, tag, tickLabel } from "./svg.js";

export interface RegionOptions {
  panelWidth: number;
  panelHeight: number;
  perRow: number;
}

export const REGION_DEFAULTS: RegionOptions = { panelWidth: 340, panelHeight: 320, perRow: 3 };

const MARGIN = { left: 52, right: 14, top: 20, bottom: 42 };

export const CLASS_COLORS: Record<RowClass, string> = {
  SEPARABLE: "#9e9e9e",
  ENTANGLED: "#d62728",
  NONPHYSICAL: "#000000",
  OUT_OF_DOMAIN: "#ffffff",
};

export interface Grid {
  source: string;
  thetas: number[];
  etas: number[];
  labels: RowClass[][]; // [thetaIndex][etaIndex]
}

export function buildGrid(table: SweepTable): Grid {
  const thetas = [...new Set(table.rows.map((row) => row.theta))].sort((a, b) => a - b);
  const etas = [...new Set(table.rows.map((row) => row.eta))].sort((a, b) => a - b);
  if (thetas.length * etas.length !== table.rows.length) {
    throw new CsvError(
      `${table.source}: non-rectangular grid; ${thetas.length} x ${etas.length} axis values ` +
      `but ${table.rows.length} rows`);
  }
  const thetaIndex = new Map(thetas.map((value, index) => [value, index]));
  const etaIndex = new Map(etas.map((value, index) => [value, index]));
  const labels: (RowClass | undefined)[][] = thetas.map(() => new Array(etas.length).fill(undefined));
  table.rows.forEach((row, index) => {
    const ti = thetaIndex.get(row.theta)!;
    const ei = etaIndex.get(row.eta)!;
    if (labels[ti][ei] !== undefined) {
      throw new CsvError(`${table.source}:${index + 2}: duplicate grid point (${row.theta}, ${row.eta})`);
    }
    labels[ti][ei] = row.label;
  });
  return { source: table.source, thetas, etas, labels: labels as RowClass[][] };
}

function panel(grid: Grid, options: RegionOptions, originX: number, originY: number, title: string): string {
  const plotW = options.panelWidth - MARGIN.left - MARGIN.right;
  const plotH = options.panelHeight - MARGIN.top - MARGIN.bottom;
  const nTheta = grid.thetas.length;
  const nEta = grid.etas.length;
  const left = originX + MARGIN.left;
  const top = originY + MARGIN.top;
  const cellW = plotW / nTheta;
  const cellH = plotH / nEta;

  const parts: string[] = [];
  // cells: x spans theta, y spans eta (increasing upward); white runs are
  // left to the page background
  for (let ei = 0; ei < nEta; ei++) {
    const y = top + plotH - (ei + 1) * cellH;
    let runStart = 0;
    for (let ti = 1; ti <= nTheta; ti++) {
      if (ti < nTheta && grid.labels[ti][ei] === grid.labels[runStart][ei]) {
        continue;
      }
      const label = grid.labels[runStart][ei];
      if (label !== "OUT_OF_DOMAIN") {
        parts.push(tag("rect", {
          x: fmt(left + runStart * cellW), y: fmt(y),
          width: fmt((ti - runStart) * cellW), height: fmt(cellH + 0.35),
          fill: CLASS_COLORS[label],
        }));
      }
      runStart = ti;
    }
  }
  parts.push(tag("rect", { x: left, y: top, width: plotW, height: plotH,
                           fill: "none", stroke: "#333333", "stroke-width": 1 }));

  const sx = linearScale([grid.thetas[0], grid.thetas[nTheta - 1]], [left + cellW / 2, left + plotW - cellW / 2]);
  const sy = linearScale([grid.etas[0], grid.etas[nEta - 1]], [top + plotH - cellH / 2, top + cellH / 2]);
  for (const tick of niceTicks(grid.thetas[0], grid.thetas[nTheta - 1], 4)) {
    parts.push(tag("line", { x1: sx(tick), y1: top + plotH, x2: sx(tick), y2: top + plotH + 4,
                             stroke: "#333333", "stroke-width": 1 }));
    parts.push(tag("text", { x: sx(tick), y: top + plotH + 16, "text-anchor": "middle",
                             "font-family": "sans-serif", "font-size": 11 }, esc(tickLabel(tick))));
  }
  for (const tick of niceTicks(grid.etas[0], grid.etas[nEta - 1], 4)) {
    parts.push(tag("line", { x1: left - 4, y1: sy(tick), x2: left, y2: sy(tick),
                             stroke: "#333333", "stroke-width": 1 }));
    parts.push(tag("text", { x: left - 7, y: sy(tick) + 4, "text-anchor": "end",
                             "font-family": "sans-serif", "font-size": 11 }, esc(tickLabel(tick))));
  }
  parts.push(tag("text", { x: left + plotW / 2, y: originY + options.panelHeight - 8,
                           "text-anchor": "middle", "font-family": "sans-serif", "font-size": 12 }, "theta"));
  parts.push(tag("text", { x: originX + 14, y: top + plotH / 2, "text-anchor": "middle",
                           "font-family": "sans-serif", "font-size": 12,
                           transform: `rotate(-90 ${fmt(originX + 14)} ${fmt(top + plotH / 2)})` }, "eta"));
  parts.push(tag("text", { x: left + plotW / 2, y: originY + 14, "text-anchor": "middle",
                           "font-family": "sans-serif", "font-size": 12 }, esc(title)));
  return parts.join("\n");
}

function titleFromSource(source: string): string {
  const base = source.split("/").pop() ?? source;
  return base.replace(/\.csv$/i, "");
}

export function renderRegions(tables: SweepTable[], options: RegionOptions = REGION_DEFAULTS): string {
  if (tables.length === 0) {
    throw new CsvError("no input tables");
  }
  const grids = tables.map(buildGrid);
  const columns = Math.min(options.perRow, grids.length);
  const rows = Math.ceil(grids.length / options.perRow);
  const body: string[] = [];
  grids.forEach((grid, index) => {
    const originX = (index % options.perRow) * options.panelWidth;
    const originY = Math.floor(index / options.perRow) * options.panelHeight;
    body.push(panel(grid, options, originX, originY, titleFromSource(grid.source)));
  });
  return document(columns * options.panelWidth, rows * options.panelHeight, body);
}
