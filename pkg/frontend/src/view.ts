/**
 * Pure render helpers: wire-format values in, HTML strings out.
 *
 * Nothing here computes or infers; every displayed fact comes verbatim from
 * a service response, with rationals shown as their exact strings.
 */

import { ratToNumber } from "./rational.js";
import type {
  ChoiceJson,
  ConsistencyState,
  MembershipJson,
  OptionSetJson,
  ReportJson,
  SessionView,
  StepJson,
  Vector,
  Violation,
  WitnessEntry,
} from "./types.js";

export function escapeHtml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

export function vecText(vector: Vector): string {
  return `(${vector.join(", ")})`;
}

export function setText(optionSet: OptionSetJson): string {
  return `{${optionSet.map(vecText).join(", ")}}`;
}

const vecKey = (vector: Vector): string => vector.join("|");

export function renderConsistencyBadge(state: ConsistencyState): string {
  return `<span class="badge badge-${state}">${state}</span>`;
}

export function renderStatements(session: SessionView): string {
  if (session.statements.length === 0) {
    return `<p class="empty">No statements recorded yet.</p>`;
  }
  const items = session.statements
    .map((statement, index) => {
      const chosen = new Set(statement.chosen.map(vecKey));
      const cells = statement.context
        .map((vector) => {
          const cls = chosen.has(vecKey(vector)) ? "kept" : "passed";
          return `<span class="${cls}">${escapeHtml(vecText(vector))}</span>`;
        })
        .join(" ");
      return (
        `<li data-index="${index}">${cells} ` +
        `<button class="delete-statement" data-index="${index}">retract</button></li>`
      );
    })
    .join("");
  return `<ol class="statements">${items}</ol>`;
}

export function renderViolations(violations: Violation[]): string {
  if (violations.length === 0) return "";
  const items = violations
    .map(
      (v) =>
        `<li class="violation" data-field="${escapeHtml(v.field)}">` +
        `<strong>${escapeHtml(v.field)}</strong>: ${escapeHtml(v.message)}</li>`,
    )
    .join("");
  return `<ul class="violations">${items}</ul>`;
}

function renderWitnessList(witnesses: WitnessEntry[], truncated: boolean): string {
  const rows = witnesses
    .map(
      (w) =>
        `<li>tuple ${w.tuple.map(vecText).map(escapeHtml).join(" , ")} : ` +
        `bounded by s = ${escapeHtml(vecText(w.s))} with weights ` +
        `(${w.lambda.map(escapeHtml).join(", ")})</li>`,
    )
    .join("");
  const note = truncated ? `<li class="note">(further tuples omitted)</li>` : "";
  return `<ul class="witnesses">${rows}${note}</ul>`;
}

export function renderMembership(membership: MembershipJson): string {
  if (membership.positive_witness !== null) {
    return `<p>contains an option above zero: ${escapeHtml(
      vecText(membership.positive_witness),
    )}</p>`;
  }
  if (membership.witnesses) {
    return renderWitnessList(membership.witnesses, membership.witnesses_truncated ?? false);
  }
  if (membership.counterexample !== null) {
    return `<p>no bounding pair for tuple ${membership.counterexample
      .map(vecText)
      .map(escapeHtml)
      .join(" , ")}</p>`;
  }
  return `<p>nothing recorded implies this.</p>`;
}

/**
 * The choose panel: chosen options highlighted, rejected options struck
 * through with their rejection evidence expandable.
 */
export function renderChoosePanel(result: ChoiceJson): string {
  const rejectionDocs = new Map(
    (result.rejections ?? []).map((r) => [vecKey(r.option), r.membership]),
  );
  const chosen = result.chosen
    .map(
      (vector) =>
        `<li class="chosen" data-option="${escapeHtml(vecKey(vector))}">` +
        `${escapeHtml(vecText(vector))}</li>`,
    )
    .join("");
  const rejected = result.rejected
    .map((vector) => {
      const membership = rejectionDocs.get(vecKey(vector));
      const evidence = membership
        ? `<details><summary>why rejected</summary>${renderMembership(membership)}</details>`
        : "";
      return (
        `<li class="rejected" data-option="${escapeHtml(vecKey(vector))}">` +
        `<s>${escapeHtml(vecText(vector))}</s>${evidence}</li>`
      );
    })
    .join("");
  return (
    `<div class="choice-result">` +
    `<h3>chosen</h3><ul class="chosen-list">${chosen}</ul>` +
    `<h3>rejected</h3><ul class="rejected-list">${rejected}</ul>` +
    `</div>`
  );
}

/** Shown instead of the panel when the session's records conflict. */
export function renderInconsistentPanel(probe: MembershipJson): string {
  return (
    `<div class="choice-disabled">` +
    `<p>The recorded choices admit no coherent extension; ` +
    `retract a statement before querying.</p>` +
    renderMembership(probe) +
    `</div>`
  );
}

function stepText(step: StepJson): string {
  if (step.rule === "remove-zero") {
    return `dropped the zero option from ${setText(step.set ?? [])}`;
  }
  if (step.rule === "remove-dominated-option") {
    return (
      `dropped ${vecText(step.removed ?? [])}: bounded by ` +
      `${step.mu} x ${vecText(step.partner ?? [])}`
    );
  }
  return `dropped set ${setText(step.removed_set ?? [])}: already implied by the rest`;
}

/** Before/after diff of the simplification plus one entry per rewrite. */
export function renderInspector(report: ReportJson): string {
  const survivors = new Set(report.output.map(setText));
  const before = report.input
    .map((optionSet) => {
      const text = setText(optionSet);
      const cls = survivors.has(text) ? "kept-set" : "dropped-set";
      return `<li class="${cls}">${escapeHtml(text)}</li>`;
    })
    .join("");
  const after = report.output
    .map((optionSet) => `<li class="kept-set">${escapeHtml(setText(optionSet))}</li>`)
    .join("");
  const steps = report.steps
    .map(
      (step) =>
        `<li class="step" data-rule="${step.rule}">${escapeHtml(stepText(step))}` +
        (step.witness
          ? `<details><summary>evidence</summary>${renderMembership(step.witness)}</details>`
          : "") +
        `</li>`,
    )
    .join("");
  return (
    `<div class="inspector">` +
    `<div class="diff"><div><h3>recorded</h3><ul>${before}</ul></div>` +
    `<div><h3>reduced</h3><ul>${after}</ul></div></div>` +
    `<h3>steps (${report.steps.length})</h3><ol class="steps">${steps}</ol>` +
    `</div>`
  );
}

/** Decorative scatter for 2-outcome spaces; no inference happens here. */
export function renderScatter(result: ChoiceJson, labels: string[]): string {
  if (labels.length !== 2) return "";
  const points = result.options.map((vector) => ({
    x: ratToNumber(vector[0] ?? "0"),
    y: ratToNumber(vector[1] ?? "0"),
    chosen: result.chosen.some((c) => vecKey(c) === vecKey(vector)),
    label: vecText(vector),
  }));
  const xs = points.map((p) => p.x);
  const ys = points.map((p) => p.y);
  const pad = 1;
  const lo = Math.min(...xs, ...ys, 0) - pad;
  const hi = Math.max(...xs, ...ys, 0) + pad;
  const scale = (v: number) => ((v - lo) / (hi - lo)) * 200;
  const dots = points
    .map(
      (p) =>
        `<circle cx="${scale(p.x).toFixed(1)}" cy="${(200 - scale(p.y)).toFixed(1)}" ` +
        `r="4" class="${p.chosen ? "dot-chosen" : "dot-rejected"}">` +
        `<title>${escapeHtml(p.label)}</title></circle>`,
    )
    .join("");
  const zx = scale(0).toFixed(1);
  const zy = (200 - scale(0)).toFixed(1);
  return (
    `<svg viewBox="0 0 200 200" class="scatter" role="img">` +
    `<line x1="${zx}" y1="0" x2="${zx}" y2="200" class="axis"/>` +
    `<line x1="0" y1="${zy}" x2="200" y2="${zy}" class="axis"/>` +
    dots +
    `</svg>`
  );
}
