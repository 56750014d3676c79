/** Minimal CSV handling for the fixed-schema tables the simulator emits. */

export interface Table {
  header: string[];
  rows: string[][];
}

export class MissingColumnError extends Error {
  constructor(readonly column: string) {
    super(`missing column: ${column}`);
    this.name = "MissingColumnError";
  }
}

export function parseCsv(text: string): Table {
  const lines = text.split(/\r?\n/).filter((line) => line.length > 0);
  if (lines.length === 0) {
    throw new Error("no header row");
  }
  const [first, ...rest] = lines;
  const header = first.split(",");
  return { header, rows: rest.map((line) => line.split(",")) };
}

export function requireColumns(table: Table, required: string[]): void {
  for (const column of required) {
    if (!table.header.includes(column)) {
      throw new MissingColumnError(column);
    }
  }
}

export function column(table: Table, name: string): number[] {
  const index = table.header.indexOf(name);
  if (index < 0) {
    throw new MissingColumnError(name);
  }
  return table.rows.map((row) => Number(row[index]));
}
