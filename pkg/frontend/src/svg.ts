/** Self-contained SVG line charts; no DOM, no canvas, deterministic output. */

import { FigureData, Series } from "./figures.js";

export interface RenderOptions {
  width?: number;
  height?: number;
  title?: string;
  xRange?: [number, number];
  yRange?: [number, number];
}

const PALETTE = [
  "#1f77b4",
  "#ff7f0e",
  "#2ca02c",
  "#d62728",
  "#9467bd",
  "#8c564b",
  "#e377c2",
  "#7f7f7f",
];

const MARGIN = { top: 40, right: 30, bottom: 52, left: 64 };

function fmt(value: number): string {
  // Fixed short decimal rendering keeps output byte-stable.
  return Number(value.toPrecision(6)).toString();
}

function extent(values: number[]): [number, number] | null {
  let lo = Infinity;
  let hi = -Infinity;
  for (const v of values) {
    if (Number.isFinite(v)) {
      lo = Math.min(lo, v);
      hi = Math.max(hi, v);
    }
  }
  return lo <= hi ? [lo, hi] : null;
}

function padDegenerate([lo, hi]: [number, number]): [number, number] {
  if (lo < hi) return [lo, hi];
  const pad = Math.max(1, Math.abs(lo) * 0.1);
  return [lo - pad, hi + pad];
}

/** Tick positions at a 1/2/5 x 10^k step covering [lo, hi]. */
export function linearTicks(lo: number, hi: number, target = 6): number[] {
  const span = hi - lo;
  const rawStep = span / Math.max(target - 1, 1);
  const power = Math.floor(Math.log10(rawStep));
  const base = 10 ** power;
  let step = 10 * base;
  for (const mult of [1, 2, 5]) {
    if (mult * base >= rawStep) {
      step = mult * base;
      break;
    }
  }
  const ticks: number[] = [];
  for (let t = Math.ceil(lo / step) * step; t <= hi + step * 1e-9; t += step) {
    ticks.push(Math.abs(t) < step * 1e-9 ? 0 : t);
  }
  return ticks;
}

/** Decade ticks, with 2x and 5x subticks when few decades are spanned. */
export function logTicks(lo: number, hi: number): number[] {
  const first = Math.floor(Math.log10(lo));
  const last = Math.ceil(Math.log10(hi));
  const subticks = last - first <= 3 ? [1, 2, 5] : [1];
  const ticks: number[] = [];
  for (let power = first; power <= last; power++) {
    for (const mult of subticks) {
      const t = mult * 10 ** power;
      if (t >= lo * (1 - 1e-12) && t <= hi * (1 + 1e-12)) {
        ticks.push(t);
      }
    }
  }
  return ticks;
}

function esc(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;");
}

export function renderLineChart(figure: FigureData,
                                options: RenderOptions = {}): string {
  const width = options.width ?? 720;
  const height = options.height ?? 480;
  const plotW = width - MARGIN.left - MARGIN.right;
  const plotH = height - MARGIN.top - MARGIN.bottom;

  const xs = figure.series.flatMap((s) => s.x);
  const ys = figure.series.flatMap((s) => s.y);
  const xExtent = options.xRange ?? extent(xs);
  const yExtent = options.yRange ?? extent(ys);
  const [x0, x1] = padDegenerate(xExtent ?? (figure.logX ? [1, 10] : [0, 1]));
  const [y0, y1] = padDegenerate(yExtent ?? [0, 1]);

  const sx = figure.logX
    ? (x: number) =>
        MARGIN.left +
        ((Math.log10(x) - Math.log10(x0)) / (Math.log10(x1) - Math.log10(x0))) *
          plotW
    : (x: number) => MARGIN.left + ((x - x0) / (x1 - x0)) * plotW;
  const sy = (y: number) => MARGIN.top + plotH - ((y - y0) / (y1 - y0)) * plotH;

  const parts: string[] = [];
  parts.push(
    `<svg xmlns="http://www.w3.org/2000/svg" width="${width}" ` +
      `height="${height}" viewBox="0 0 ${width} ${height}" ` +
      `font-family="Helvetica, Arial, sans-serif" font-size="12">`,
  );
  parts.push(`<rect width="${width}" height="${height}" fill="white"/>`);

  if (options.title) {
    parts.push(
      `<text x="${width / 2}" y="${MARGIN.top / 2}" text-anchor="middle" ` +
        `font-size="14" class="title">${esc(options.title)}</text>`,
    );
  }

  // Gridlines and tick labels.
  const xTicks = figure.logX ? logTicks(x0, x1) : linearTicks(x0, x1);
  const yTicks = linearTicks(y0, y1);
  for (const t of xTicks) {
    const px = fmt(sx(t));
    parts.push(
      `<line x1="${px}" y1="${MARGIN.top}" x2="${px}" ` +
        `y2="${MARGIN.top + plotH}" stroke="#dddddd" stroke-width="1"/>`,
    );
    parts.push(
      `<text x="${px}" y="${MARGIN.top + plotH + 18}" text-anchor="middle" ` +
        `class="tick">${fmt(t)}</text>`,
    );
  }
  for (const t of yTicks) {
    const py = fmt(sy(t));
    parts.push(
      `<line x1="${MARGIN.left}" y1="${py}" x2="${MARGIN.left + plotW}" ` +
        `y2="${py}" stroke="#dddddd" stroke-width="1"/>`,
    );
    parts.push(
      `<text x="${MARGIN.left - 8}" y="${py}" text-anchor="end" ` +
        `dominant-baseline="middle" class="tick">${fmt(t)}</text>`,
    );
  }

  // Axes.
  parts.push(
    `<rect x="${MARGIN.left}" y="${MARGIN.top}" width="${plotW}" ` +
      `height="${plotH}" fill="none" stroke="black" stroke-width="1"/>`,
  );
  parts.push(
    `<text x="${MARGIN.left + plotW / 2}" y="${height - 12}" ` +
      `text-anchor="middle" class="x-label">${esc(figure.xLabel)}</text>`,
  );
  parts.push(
    `<text x="18" y="${MARGIN.top + plotH / 2}" text-anchor="middle" ` +
      `transform="rotate(-90 18 ${MARGIN.top + plotH / 2})" ` +
      `class="y-label">${esc(figure.yLabel)}</text>`,
  );

  // Series.
  figure.series.forEach((series: Series, index: number) => {
    if (series.x.length === 0) {
      return;
    }
    const colour = PALETTE[index % PALETTE.length];
    const points = series.x
      .map((x, i) => `${fmt(sx(x))},${fmt(sy(series.y[i]))}`)
      .join(" ");
    parts.push(
      `<polyline class="series" fill="none" stroke="${colour}" ` +
        `stroke-width="2" points="${points}"/>`,
    );
  });

  // Legend, one entry per series (including empty ones, to keep the
  // declared series list visible).
  figure.series.forEach((series: Series, index: number) => {
    const colour = PALETTE[index % PALETTE.length];
    const y = MARGIN.top + 14 + index * 18;
    const x = MARGIN.left + plotW - 150;
    parts.push(
      `<line x1="${x}" y1="${y - 4}" x2="${x + 24}" y2="${y - 4}" ` +
        `stroke="${colour}" stroke-width="2" class="legend-swatch"/>`,
    );
    parts.push(
      `<text x="${x + 30}" y="${y}" class="legend">${esc(series.label)}</text>`,
    );
  });

  parts.push("</svg>");
  return parts.join("\n") + "\n";
}
