/**
 * Page wiring. All state lives on the server: after every mutation the page
 * re-fetches what it shows (refresh-safe by construction), and no control is
 * updated optimistically.
 */

import { ApiError, Client } from "./api.js";
import { draftToStatement, validateStatementDraft, type EditorRow } from "./validate.js";
import {
  renderChoosePanel,
  renderConsistencyBadge,
  renderInconsistentPanel,
  renderInspector,
  renderScatter,
  renderStatements,
  renderViolations,
} from "./view.js";

const client = new Client("");

const el = <T extends HTMLElement>(id: string): T => {
  const node = document.getElementById(id);
  if (node === null) throw new Error(`missing #${id}`);
  return node as T;
};

let sessionId: string | null = null;
let outcomes: string[] = [];

function editorRows(table: HTMLElement): EditorRow[] {
  return Array.from(table.querySelectorAll("tr.option-row")).map((row) => ({
    cells: Array.from(row.querySelectorAll<HTMLInputElement>("input.coord")).map(
      (input) => input.value,
    ),
    ticked: row.querySelector<HTMLInputElement>("input.tick")?.checked ?? false,
  }));
}

function addEditorRow(table: HTMLElement): void {
  const row = document.createElement("tr");
  row.className = "option-row";
  row.innerHTML =
    outcomes.map(() => `<td><input class="coord" value="0" size="6"></td>`).join("") +
    `<td><input type="checkbox" class="tick"></td>` +
    `<td><button type="button" class="drop-row">x</button></td>`;
  row.querySelector(".drop-row")?.addEventListener("click", () => row.remove());
  table.appendChild(row);
}

function resetEditor(table: HTMLElement, header: HTMLElement): void {
  header.innerHTML =
    outcomes.map((label) => `<th>${label}</th>`).join("") +
    `<th>keep</th><th></th>`;
  table.innerHTML = "";
  addEditorRow(table);
  addEditorRow(table);
}

async function refresh(): Promise<void> {
  if (sessionId === null) return;
  const session = await client.getSession(sessionId);
  outcomes = session.outcomes;
  el("session-title").textContent = `session ${session.id}`;
  el("statements-view").innerHTML = renderStatements(session);
  for (const button of el("statements-view").querySelectorAll<HTMLButtonElement>(
    ".delete-statement",
  )) {
    button.addEventListener("click", async () => {
      await client.deleteStatement(sessionId!, Number(button.dataset.index));
      await refresh();
    });
  }

  const verdict = await client.getConsistency(sessionId);
  el("consistency-badge").innerHTML = renderConsistencyBadge(
    verdict.consistent ? "consistent" : "inconsistent",
  );
  const choosable = verdict.consistent;
  el<HTMLButtonElement>("run-choose").disabled = !choosable;
  if (!choosable) {
    el("choose-result").innerHTML = renderInconsistentPanel(verdict.probe);
  }

  const report = await client.getSimplified(sessionId);
  el("inspector").innerHTML = renderInspector(report);
}

async function submitStatement(): Promise<void> {
  if (sessionId === null) return;
  const rows = editorRows(el("statement-rows"));
  const problems = validateStatementDraft(rows, outcomes.length);
  el("statement-violations").innerHTML = renderViolations(problems);
  if (problems.length > 0) return;
  try {
    await client.addStatement(sessionId, draftToStatement(rows));
    resetEditor(el("statement-rows"), el("statement-header"));
    await refresh();
  } catch (error) {
    if (error instanceof ApiError) {
      el("statement-violations").innerHTML = renderViolations(error.violations);
      return;
    }
    throw error;
  }
}

async function runChoose(): Promise<void> {
  if (sessionId === null) return;
  const rows = editorRows(el("choose-rows"));
  const cellsOnly = rows.map((row) => ({ ...row, ticked: true }));
  const problems = validateStatementDraft(cellsOnly, outcomes.length);
  el("choose-violations").innerHTML = renderViolations(problems);
  if (problems.length > 0) return;
  try {
    const result = await client.choose(
      sessionId,
      rows.map((row) => row.cells.map((c) => c.trim())),
    );
    el("choose-result").innerHTML =
      renderChoosePanel(result) + renderScatter(result, outcomes);
  } catch (error) {
    if (error instanceof ApiError && error.consistency !== null) {
      el("choose-result").innerHTML = renderInconsistentPanel(error.consistency.probe);
      el<HTMLButtonElement>("run-choose").disabled = true;
      return;
    }
    if (error instanceof ApiError) {
      el("choose-violations").innerHTML = renderViolations(error.violations);
      return;
    }
    throw error;
  }
}

async function createSession(): Promise<void> {
  const labels = el<HTMLInputElement>("outcome-labels")
    .value.split(",")
    .map((s) => s.trim())
    .filter((s) => s.length > 0);
  try {
    const session = await client.createSession(labels);
    const url = new URL(window.location.href);
    url.searchParams.set("session", session.id);
    window.history.replaceState(null, "", url);
    await openSession(session.id);
  } catch (error) {
    if (error instanceof ApiError) {
      el("create-violations").innerHTML = renderViolations(error.violations);
      return;
    }
    throw error;
  }
}

async function openSession(id: string): Promise<void> {
  sessionId = id;
  const session = await client.getSession(id);
  outcomes = session.outcomes;
  el("create-panel").hidden = true;
  el("session-panel").hidden = false;
  resetEditor(el("statement-rows"), el("statement-header"));
  resetEditor(el("choose-rows"), el("choose-header"));
  el("choose-header").querySelectorAll("th")[outcomes.length]!.textContent = "";
  await refresh();
}

export function boot(): void {
  el("create-session").addEventListener("click", () => void createSession());
  el("add-statement-row").addEventListener("click", () =>
    addEditorRow(el("statement-rows")),
  );
  el("submit-statement").addEventListener("click", () => void submitStatement());
  el("add-choose-row").addEventListener("click", () => addEditorRow(el("choose-rows")));
  el("run-choose").addEventListener("click", () => void runChoose());

  const fromUrl = new URL(window.location.href).searchParams.get("session");
  if (fromUrl !== null) void openSession(fromUrl);
}

if (typeof document !== "undefined") {
  document.addEventListener("DOMContentLoaded", boot);
}
