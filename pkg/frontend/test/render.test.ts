import { mkdtempSync, readFileSync, writeFileSync } from "node:fs";
import { tmpdir } from "node:os";
import { join } from "node:path";
import { afterEach, describe, expect, it, vi } from "vitest";

import { MissingColumnError, parseCsv } from "../src/csv.js";
import { buildFigure } from "../src/figures.js";
import { linearTicks, logTicks, renderLineChart } from "../src/svg.js";
import { EXIT_OK, EXIT_SCHEMA, EXIT_USAGE, main } from "../src/cli.js";

const FIXTURES = join(__dirname, "fixtures");

function fixture(name: string): string {
  return readFileSync(join(FIXTURES, name), "utf8");
}

function countSeries(svg: string): number {
  return (svg.match(/<polyline class="series"/g) ?? []).length;
}

afterEach(() => {
  vi.restoreAllMocks();
});

describe("figure construction from the canonical tables", () => {
  it("power-vs-d1 exposes SISO, DF and one curve per element count", () => {
    const figure = buildFigure("power-vs-d1", parseCsv(fixture("sweep_d1.csv")));
    expect(figure.series.map((s) => s.label)).toEqual([
      "SISO",
      "DF relay",
      "IRS N=25",
      "IRS N=50",
      "IRS N=80",
      "IRS N=150",
    ]);
    expect(figure.series[0].x).toHaveLength(321);
    expect(figure.logX).toBe(false);
  });

  it("nmin-vs-dsr exposes one curve per d1 ratio", () => {
    const figure = buildFigure("nmin-vs-dsr", parseCsv(fixture("nmin_vs_dsr.csv")));
    expect(figure.series.map((s) => s.label)).toEqual([
      "d1 = 0.5 d_sr",
      "d1 = 0.75 d_sr",
      "d1 = 1.25 d_sr",
      "d1 = 1.5 d_sr",
    ]);
    expect(figure.series[0].x).toHaveLength(71);
    expect(figure.series[0].y.every((v) => v === 1)).toBe(true);
  });

  it("maxdsr-vs-fc exposes one curve per rate on a log axis", () => {
    const figure = buildFigure("maxdsr-vs-fc", parseCsv(fixture("max_dsr.csv")));
    expect(figure.series.map((s) => s.label)).toEqual([
      "R = 5 bit/s/Hz",
      "R = 6 bit/s/Hz",
      "R = 7 bit/s/Hz",
    ]);
    expect(figure.series[0].x).toHaveLength(17);
    expect(figure.logX).toBe(true);
  });

  it("drops sentinel rows marked -1", () => {
    const table = parseCsv("d_sr_m,ratio,n_min\n10,1.5,4\n11,1.5,-1\n12,1.5,9\n");
    const figure = buildFigure("nmin-vs-dsr", table);
    expect(figure.series[0].x).toEqual([10, 12]);
  });

  it("names the missing column on schema mismatch", () => {
    const table = parseCsv("d1_m,p_siso_dBm\n0,1\n");
    expect(() => buildFigure("power-vs-d1", table)).toThrowError(
      MissingColumnError,
    );
    expect(() => buildFigure("power-vs-d1", table)).toThrowError(
      /missing column: p_df_dBm/,
    );
  });
});

describe("SVG rendering", () => {
  it("draws every series with labeled axes and a legend", () => {
    const figure = buildFigure("power-vs-d1", parseCsv(fixture("sweep_d1.csv")));
    const svg = renderLineChart(figure);
    expect(countSeries(svg)).toBe(6);
    expect(svg).toContain('class="x-label">d1 [m]</text>');
    expect(svg).toContain("transmit power [dBm]");
    expect((svg.match(/class="legend"/g) ?? []).length).toBe(6);
  });

  it("renders the log-frequency figure", () => {
    const figure = buildFigure("maxdsr-vs-fc", parseCsv(fixture("max_dsr.csv")));
    const svg = renderLineChart(figure);
    expect(countSeries(svg)).toBe(3);
    expect(svg).toContain("carrier frequency [GHz]");
  });

  it("is deterministic", () => {
    const figure = buildFigure("nmin-vs-dsr", parseCsv(fixture("nmin_vs_dsr.csv")));
    expect(renderLineChart(figure)).toBe(renderLineChart(figure));
  });

  it("renders empty axes for a header-only table", () => {
    const figure = buildFigure("power-vs-d1",
      parseCsv("d1_m,p_siso_dBm,p_df_dBm\n"));
    const svg = renderLineChart(figure);
    expect(countSeries(svg)).toBe(0);
    expect(svg).toContain("<svg");
    expect(svg).toContain('class="x-label">d1 [m]</text>');
  });

  it("honors explicit axis ranges", () => {
    const figure = buildFigure("power-vs-d1", parseCsv(fixture("sweep_d1.csv")));
    const svg = renderLineChart(figure, { yRange: [-40, 40] });
    expect(svg).toContain(">40</text>");
    expect(svg).toContain(">-40</text>");
  });
});

describe("tick generation", () => {
  it("linear ticks sit on a 1/2/5 decade grid", () => {
    expect(linearTicks(0, 160)).toEqual([0, 50, 100, 150]);
    expect(linearTicks(-12, 42)).toEqual([0, 20, 40]);
    expect(linearTicks(-12, 42, 11)).toEqual([-10, 0, 10, 20, 30, 40]);
  });

  it("log ticks cover the decades", () => {
    expect(logTicks(2, 100)).toEqual([2, 5, 10, 20, 50, 100]);
  });
});

describe("command line", () => {
  const temp = mkdtempSync(join(tmpdir(), "irsim-plots-"));

  it.each([
    ["sweep_d1.csv", "power-vs-d1", 6],
    ["nmin_vs_dsr.csv", "nmin-vs-dsr", 4],
    ["max_dsr.csv", "maxdsr-vs-fc", 3],
  ])("renders %s as %s", (name, kind, series) => {
    const out = join(temp, `${kind}.svg`);
    const code = main([
      "--input", join(FIXTURES, name), "--kind", kind, "--output", out,
    ]);
    expect(code).toBe(EXIT_OK);
    const svg = readFileSync(out, "utf8");
    expect(countSeries(svg)).toBe(series);
    expect(svg).toContain('class="y-label"');
  });

  it("exits cleanly on a header-only table", () => {
    const input = join(temp, "empty.csv");
    writeFileSync(input, "d1_m,p_siso_dBm,p_df_dBm\n");
    const out = join(temp, "empty.svg");
    const errors = vi.spyOn(console, "error").mockImplementation(() => {});
    expect(main(["--input", input, "--kind", "power-vs-d1",
                 "--output", out])).toBe(EXIT_OK);
    expect(errors).not.toHaveBeenCalled();
    expect(countSeries(readFileSync(out, "utf8"))).toBe(0);
  });

  it("names the missing column and exits nonzero on schema mismatch", () => {
    const input = join(temp, "bad.csv");
    writeFileSync(input, "d_sr_m,ratio\n10,0.5\n");
    const errors = vi.spyOn(console, "error").mockImplementation(() => {});
    const code = main(["--input", input, "--kind", "nmin-vs-dsr",
                       "--output", join(temp, "bad.svg")]);
    expect(code).toBe(EXIT_SCHEMA);
    expect(errors.mock.calls.flat().join(" ")).toContain("missing column: n_min");
  });

  it("rejects unknown kinds and incomplete invocations", () => {
    vi.spyOn(console, "error").mockImplementation(() => {});
    expect(main(["--input", "x.csv", "--kind", "pie", "--output", "y.svg"]))
      .toBe(EXIT_USAGE);
    expect(main(["--kind", "power-vs-d1"])).toBe(EXIT_USAGE);
    expect(main(["--bogus"])).toBe(EXIT_USAGE);
  });

  it("reports unreadable input as a usage error", () => {
    vi.spyOn(console, "error").mockImplementation(() => {});
    expect(main(["--input", join(temp, "absent.csv"), "--kind", "power-vs-d1",
                 "--output", join(temp, "absent.svg")])).toBe(EXIT_USAGE);
  });
});
