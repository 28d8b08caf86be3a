/**
 * Client-side statement validation, mirroring the server's rules.
 *
 * The server stays authoritative (its 422 bodies are rendered verbatim);
 * this pre-check just catches the obvious problems before a round trip.
 */

import { isRationalString } from "./rational.js";
import type { Violation } from "./types.js";

export interface EditorRow {
  cells: string[];
  ticked: boolean;
}

export function validateVector(cells: string[], dimension: number): string | null {
  if (cells.length !== dimension) {
    return `expected ${dimension} coordinates, got ${cells.length}`;
  }
  for (const cell of cells) {
    if (!isRationalString(cell)) {
      return `"${cell}" is not a rational (use n or p/q with q > 0)`;
    }
  }
  return null;
}

/** All violations of a statement draft; empty means safe to submit. */
export function validateStatementDraft(
  rows: EditorRow[],
  dimension: number,
): Violation[] {
  const violations: Violation[] = [];
  if (rows.length === 0) {
    violations.push({ field: "context", message: "context is empty" });
  }
  rows.forEach((row, index) => {
    const problem = validateVector(row.cells, dimension);
    if (problem !== null) {
      violations.push({ field: `row ${index + 1}`, message: problem });
    }
  });
  if (!rows.some((row) => row.ticked)) {
    violations.push({
      field: "chosen",
      message: "chosen is empty: tick at least one kept option",
    });
  }
  return violations;
}

export function draftToStatement(rows: EditorRow[]): {
  context: string[][];
  chosen: string[][];
} {
  return {
    context: rows.map((row) => row.cells.map((c) => c.trim())),
    chosen: rows.filter((row) => row.ticked).map((row) => row.cells.map((c) => c.trim())),
  };
}
