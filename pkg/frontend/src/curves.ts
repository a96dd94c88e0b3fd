/**
 * Curve panels: the two smallest invariants against the varying deformation
 * axis, one panel per input table, with a guide line at the threshold 1.
 */

import { CsvError, SweepRow, SweepTable } from "./csv.js";
import { Scale, document, esc, fmt, linearScale, niceTicks, tag, tickLabel } from "./svg.js";

export interface CurveOptions {
  panelWidth: number;
  panelHeight: number;
  perRow: number;
}

export const CURVE_DEFAULTS: CurveOptions = { panelWidth: 360, panelHeight: 280, perRow: 3 };

const MARGIN = { left: 52, right: 14, top: 34, bottom: 42 };
const NU_COLOR = "#000000";
const NU_PRIME_COLOR = "#d62728";
const GUIDE_COLOR = "#888888";

interface Series {
  fixedAxis: "theta" | "eta";
  fixedValue: number;
  x: number[];
  nu: number[];
  nuPrime: number[];
}

function axisValues(rows: SweepRow[], axis: "theta" | "eta"): number[] {
  return rows.map((row) => (axis === "theta" ? row.theta : row.eta));
}

export function extractSeries(table: SweepTable): Series {
  const thetas = new Set(axisValues(table.rows, "theta"));
  const etas = new Set(axisValues(table.rows, "eta"));
  let fixedAxis: "theta" | "eta";
  if (thetas.size === 1) {
    fixedAxis = "theta";
  } else if (etas.size === 1) {
    fixedAxis = "eta";
  } else {
    throw new CsvError(`${table.source}: rows do not share a fixed theta or eta value`);
  }
  const varying = fixedAxis === "theta" ? "eta" : "theta";
  return {
    fixedAxis,
    fixedValue: fixedAxis === "theta" ? table.rows[0].theta : table.rows[0].eta,
    x: axisValues(table.rows, varying),
    nu: table.rows.map((row) => row.nuMinus),
    nuPrime: table.rows.map((row) => row.nuMinusPrime),
  };
}

/** Polyline segments split at NaN gaps; single points fall back to markers. */
function curve(x: number[], y: number[], sx: Scale, sy: Scale, color: string): string {
  const segments: string[][] = [[]];
  x.forEach((value, i) => {
    if (Number.isNaN(y[i])) {
      if (segments[segments.length - 1].length > 0) {
        segments.push([]);
      }
      return;
    }
    segments[segments.length - 1].push(`${fmt(sx(value))},${fmt(sy(y[i]))}`);
  });
  return segments
    .filter((points) => points.length > 0)
    .map((points) =>
      points.length === 1
        ? tag("circle", { cx: points[0].split(",")[0], cy: points[0].split(",")[1], r: 3, fill: color })
        : tag("polyline", { points: points.join(" "), fill: "none", stroke: color, "stroke-width": 1.6 }))
    .join("");
}

function panel(series: Series, options: CurveOptions, originX: number, originY: number): string {
  const plotW = options.panelWidth - MARGIN.left - MARGIN.right;
  const plotH = options.panelHeight - MARGIN.top - MARGIN.bottom;
  const finite = [...series.nu, ...series.nuPrime].filter((v) => !Number.isNaN(v));
  if (finite.length === 0) {
    throw new CsvError("panel has no finite invariant values");
  }
  const yLow = Math.min(...finite, 1) - 0.05 * (Math.max(...finite, 1) - Math.min(...finite, 1) || 1);
  const yHigh = Math.max(...finite, 1) + 0.05 * (Math.max(...finite, 1) - Math.min(...finite, 1) || 1);
  const sx = linearScale([Math.min(...series.x), Math.max(...series.x)],
                         [originX + MARGIN.left, originX + MARGIN.left + plotW]);
  const sy = linearScale([yLow, yHigh], [originY + MARGIN.top + plotH, originY + MARGIN.top]);

  const parts: string[] = [];
  parts.push(tag("rect", {
    x: originX + MARGIN.left, y: originY + MARGIN.top, width: plotW, height: plotH,
    fill: "none", stroke: "#333333", "stroke-width": 1,
  }));
  for (const tick of niceTicks(sx.domain[0], sx.domain[1])) {
    parts.push(tag("line", {
      x1: sx(tick), y1: originY + MARGIN.top + plotH, x2: sx(tick), y2: originY + MARGIN.top + plotH + 4,
      stroke: "#333333", "stroke-width": 1,
    }));
    parts.push(tag("text", {
      x: sx(tick), y: originY + MARGIN.top + plotH + 16, "text-anchor": "middle",
      "font-family": "sans-serif", "font-size": 11,
    }, esc(tickLabel(tick))));
  }
  for (const tick of niceTicks(yLow, yHigh)) {
    parts.push(tag("line", {
      x1: originX + MARGIN.left - 4, y1: sy(tick), x2: originX + MARGIN.left, y2: sy(tick),
      stroke: "#333333", "stroke-width": 1,
    }));
    parts.push(tag("text", {
      x: originX + MARGIN.left - 7, y: sy(tick) + 4, "text-anchor": "end",
      "font-family": "sans-serif", "font-size": 11,
    }, esc(tickLabel(tick))));
  }
  // threshold guide
  parts.push(tag("line", {
    x1: originX + MARGIN.left, y1: sy(1), x2: originX + MARGIN.left + plotW, y2: sy(1),
    stroke: GUIDE_COLOR, "stroke-width": 1, "stroke-dasharray": "5,4",
  }));
  parts.push(curve(series.x, series.nu, sx, sy, NU_COLOR));
  parts.push(curve(series.x, series.nuPrime, sx, sy, NU_PRIME_COLOR));

  const varying = series.fixedAxis === "theta" ? "eta" : "theta";
  parts.push(tag("text", {
    x: originX + options.panelWidth / 2, y: originY + 18, "text-anchor": "middle",
    "font-family": "sans-serif", "font-size": 13,
  }, esc(`${series.fixedAxis} = ${series.fixedValue}`)));
  parts.push(tag("text", {
    x: originX + MARGIN.left + plotW / 2, y: originY + options.panelHeight - 8,
    "text-anchor": "middle", "font-family": "sans-serif", "font-size": 12,
  }, esc(varying)));
  return parts.join("\n");
}

export function renderCurves(tables: SweepTable[], options: CurveOptions = CURVE_DEFAULTS): string {
  if (tables.length === 0) {
    throw new CsvError("no input tables");
  }
  const seriesList = tables.map(extractSeries);
  const columns = Math.min(options.perRow, seriesList.length);
  const rows = Math.ceil(seriesList.length / options.perRow);
  const body: string[] = [];
  seriesList.forEach((series, index) => {
    const originX = (index % options.perRow) * options.panelWidth;
    const originY = Math.floor(index / options.perRow) * options.panelHeight;
    body.push(panel(series, options, originX, originY));
  });
  // legend in the top-right corner of the sheet
  const legendX = columns * options.panelWidth - 150;
  body.push(tag("line", { x1: legendX, y1: 10, x2: legendX + 22, y2: 10, stroke: NU_COLOR, "stroke-width": 1.6 }));
  body.push(tag("text", { x: legendX + 26, y: 14, "font-family": "sans-serif", "font-size": 11 }, "nu_minus"));
  body.push(tag("line", { x1: legendX, y1: 24, x2: legendX + 22, y2: 24, stroke: NU_PRIME_COLOR, "stroke-width": 1.6 }));
  body.push(tag("text", { x: legendX + 26, y: 28, "font-family": "sans-serif", "font-size": 11 }, "nu_minus_prime"));
  return document(columns * options.panelWidth, rows * options.panelHeight, body);
}
