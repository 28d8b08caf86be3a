import { describe, expect, it } from "vitest";

import { draftToStatement, validateStatementDraft } from "../src/validate.js";

const row = (cells: string[], ticked = false) => ({ cells, ticked });

describe("validateStatementDraft", () => {
  it("accepts a well-formed draft", () => {
    const rows = [row(["5", "-3"], true), row(["3", "-2"], false)];
    expect(validateStatementDraft(rows, 2)).toEqual([]);
  });

  it("flags an empty context", () => {
    const violations = validateStatementDraft([], 2);
    expect(violations.some((v) => v.field === "context")).toBe(true);
  });

  it("flags an empty tick set", () => {
    const violations = validateStatementDraft([row(["1", "2"])], 2);
    expect(violations.some((v) => v.field === "chosen")).toBe(true);
  });

  it("flags wrong vector length", () => {
    const violations = validateStatementDraft([row(["1"], true)], 2);
    expect(violations[0]?.message).toContain("expected 2 coordinates");
  });

  it("flags non-rational cells including q=0", () => {
    const violations = validateStatementDraft([row(["1/0", "2"], true)], 2);
    expect(violations[0]?.message).toContain("1/0");
    expect(validateStatementDraft([row(["0.5", "2"], true)], 2)).toHaveLength(1);
  });
});

describe("draftToStatement", () => {
  it("keeps only ticked rows in chosen and trims cells", () => {
    const statement = draftToStatement([
      row([" 5 ", "-3"], true),
      row(["3", "-2"], false),
    ]);
    expect(statement.context).toEqual([
      ["5", "-3"],
      ["3", "-2"],
    ]);
    expect(statement.chosen).toEqual([["5", "-3"]]);
  });
});
