/** Wire-format types for the choicekit HTTP service. */

export type RationalString = string;
export type Vector = RationalString[];
export type OptionSetJson = Vector[];

export interface StatementJson {
  context: OptionSetJson;
  chosen: OptionSetJson;
}

export type ConsistencyState = "unknown" | "consistent" | "inconsistent";

export interface SessionView {
  id: string;
  outcomes: string[];
  statements: StatementJson[];
  consistency: ConsistencyState;
}

export interface WitnessEntry {
  tuple: Vector[];
  s: Vector;
  mu: RationalString[];
  lambda: RationalString[];
}

export interface MembershipJson {
  member: boolean;
  positive_witness: Vector | null;
  counterexample: Vector[] | null;
  witnesses?: WitnessEntry[] | null;
  witnesses_truncated?: boolean;
}

export interface ConsistencyJson {
  consistent: boolean;
  probe: MembershipJson;
}

export interface RejectionJson {
  option: Vector;
  membership: MembershipJson;
}

export interface ChoiceJson {
  options: OptionSetJson;
  chosen: OptionSetJson;
  rejected: OptionSetJson;
  rejections?: RejectionJson[];
}

export interface StepJson {
  rule: "remove-zero" | "remove-dominated-option" | "remove-redundant-set";
  set?: OptionSetJson;
  removed?: Vector;
  partner?: Vector;
  mu?: RationalString;
  removed_set?: OptionSetJson;
  witness?: MembershipJson;
}

export interface ReportJson {
  input: OptionSetJson[];
  output: OptionSetJson[];
  steps: StepJson[];
}

export interface Violation {
  field: string;
  message: string;
}

export interface PendingJson {
  status: "computing";
  token: string;
  poll: string;
}
