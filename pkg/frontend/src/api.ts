/** Typed client for the choicekit session service. */

import type {
  ChoiceJson,
  ConsistencyJson,
  MembershipJson,
  PendingJson,
  ReportJson,
  SessionView,
  StatementJson,
  Violation,
} from "./types.js";

export class ApiError extends Error {
  constructor(
    public status: number,
    public body: unknown,
  ) {
    super(`service answered ${status}`);
  }

  get violations(): Violation[] {
    const body = this.body as { violations?: Violation[] } | null;
    return body?.violations ?? [];
  }

  /** On 409: the consistency verdict (with the counterexample witnesses). */
  get consistency(): ConsistencyJson | null {
    const body = this.body as ConsistencyJson | null;
    return body && typeof body.consistent === "boolean" ? body : null;
  }
}

async function request<T>(base: string, path: string, init?: RequestInit): Promise<T> {
  const response = await fetch(base + path, {
    headers: { "content-type": "application/json" },
    ...init,
  });
  const body = response.status === 204 ? null : await response.json();
  if (!response.ok && response.status !== 202) {
    throw new ApiError(response.status, body);
  }
  if (response.status === 202) {
    return { __pending: body } as T;
  }
  return body as T;
}

function isPending(value: unknown): value is { __pending: PendingJson } {
  return typeof value === "object" && value !== null && "__pending" in value;
}

export class Client {
  constructor(public base: string = "") {}

  createSession(outcomes: string[]): Promise<SessionView> {
    return request(this.base, "/sessions", {
      method: "POST",
      body: JSON.stringify({ outcomes }),
    });
  }

  getSession(id: string): Promise<SessionView> {
    return request(this.base, `/sessions/${id}`);
  }

  addStatement(id: string, statement: StatementJson): Promise<unknown> {
    return request(this.base, `/sessions/${id}/statements`, {
      method: "POST",
      body: JSON.stringify(statement),
    });
  }

  deleteStatement(id: string, index: number): Promise<unknown> {
    return request(this.base, `/sessions/${id}/statements/${index}`, {
      method: "DELETE",
    });
  }

  getAssessment(id: string): Promise<{ assessment: string[][][] }> {
    return request(this.base, `/sessions/${id}/assessment`);
  }

  getSimplified(id: string): Promise<ReportJson> {
    return request(this.base, `/sessions/${id}/assessment?simplified=true`);
  }

  getConsistency(id: string): Promise<ConsistencyJson> {
    return request(this.base, `/sessions/${id}/consistency`);
  }

  /** Runs a choose query, transparently polling when the budget is exceeded. */
  async choose(id: string, options: string[][]): Promise<ChoiceJson> {
    return this.awaitResult(
      await request<ChoiceJson | { __pending: PendingJson }>(
        this.base,
        `/sessions/${id}/choose`,
        { method: "POST", body: JSON.stringify({ options }) },
      ),
    );
  }

  async member(id: string, options: string[][]): Promise<MembershipJson> {
    return this.awaitResult(
      await request<MembershipJson | { __pending: PendingJson }>(
        this.base,
        `/sessions/${id}/member`,
        { method: "POST", body: JSON.stringify({ options }) },
      ),
    );
  }

  private async awaitResult<T>(first: T | { __pending: PendingJson }): Promise<T> {
    let current = first;
    while (isPending(current)) {
      await new Promise((resolve) => setTimeout(resolve, 100));
      current = await request<T | { __pending: PendingJson }>(
        this.base,
        current.__pending.poll,
      );
    }
    return current;
  }
}
