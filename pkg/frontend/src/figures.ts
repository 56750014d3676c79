/** Maps each table schema onto the series and axes of its figure. */

import { Table, column, requireColumns } from "./csv.js";

export type FigureKind = "power-vs-d1" | "nmin-vs-dsr" | "maxdsr-vs-fc";

export const FIGURE_KINDS: FigureKind[] = [
  "power-vs-d1",
  "nmin-vs-dsr",
  "maxdsr-vs-fc",
];

export interface Series {
  label: string;
  x: number[];
  y: number[];
}

export interface FigureData {
  series: Series[];
  xLabel: string;
  yLabel: string;
  logX: boolean;
}

const IRS_COLUMN = /^p_irs_N(\d+)_dBm$/;

/** Missing results are written as -1 by the sweep tools; drop those points. */
function dropSentinels(x: number[], y: number[]): { x: number[]; y: number[] } {
  const outX: number[] = [];
  const outY: number[] = [];
  for (let i = 0; i < y.length; i++) {
    if (y[i] >= 0) {
      outX.push(x[i]);
      outY.push(y[i]);
    }
  }
  return { x: outX, y: outY };
}

function groupBy(keys: number[], x: number[], y: number[]): Map<number, Series> {
  const groups = new Map<number, Series>();
  for (let i = 0; i < keys.length; i++) {
    let series = groups.get(keys[i]);
    if (!series) {
      series = { label: String(keys[i]), x: [], y: [] };
      groups.set(keys[i], series);
    }
    series.x.push(x[i]);
    series.y.push(y[i]);
  }
  return groups;
}

function powerVsD1(table: Table): FigureData {
  requireColumns(table, ["d1_m", "p_siso_dBm", "p_df_dBm"]);
  const d1 = column(table, "d1_m");
  const series: Series[] = [
    { label: "SISO", x: d1, y: column(table, "p_siso_dBm") },
    { label: "DF relay", x: d1, y: column(table, "p_df_dBm") },
  ];
  const counts = table.header
    .map((name) => {
      const match = IRS_COLUMN.exec(name);
      return match ? Number(match[1]) : null;
    })
    .filter((n): n is number => n !== null)
    .sort((a, b) => a - b);
  for (const n of counts) {
    series.push({
      label: `IRS N=${n}`,
      x: d1,
      y: column(table, `p_irs_N${n}_dBm`),
    });
  }
  return {
    series,
    xLabel: "d1 [m]",
    yLabel: "transmit power [dBm]",
    logX: false,
  };
}

function nminVsDsr(table: Table): FigureData {
  requireColumns(table, ["d_sr_m", "ratio", "n_min"]);
  const groups = groupBy(
    column(table, "ratio"),
    column(table, "d_sr_m"),
    column(table, "n_min"),
  );
  const series = [...groups.entries()]
    .sort(([a], [b]) => a - b)
    .map(([ratio, s]) => {
      const kept = dropSentinels(s.x, s.y);
      return { label: `d1 = ${ratio} d_sr`, x: kept.x, y: kept.y };
    });
  return {
    series,
    xLabel: "d_sr [m]",
    yLabel: "minimum IRS elements N_min",
    logX: false,
  };
}

function maxDsrVsFc(table: Table): FigureData {
  requireColumns(table, ["fc_GHz", "rate_bps_hz", "max_dsr_m"]);
  const groups = groupBy(
    column(table, "rate_bps_hz"),
    column(table, "fc_GHz"),
    column(table, "max_dsr_m"),
  );
  const series = [...groups.entries()]
    .sort(([a], [b]) => a - b)
    .map(([rate, s]) => {
      const kept = dropSentinels(s.x, s.y);
      return { label: `R = ${rate} bit/s/Hz`, x: kept.x, y: kept.y };
    });
  return {
    series,
    xLabel: "carrier frequency [GHz]",
    yLabel: "maximum d_sr [m]",
    logX: true,
  };
}

export function buildFigure(kind: FigureKind, table: Table): FigureData {
  switch (kind) {
    case "power-vs-d1":
      return powerVsD1(table);
    case "nmin-vs-dsr":
      return nminVsDsr(table);
    case "maxdsr-vs-fc":
      return maxDsrVsFc(table);
  }
}
