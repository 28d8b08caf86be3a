/**
 * Exact rational strings, bigint-backed.
 *
 * The service speaks rationals as "n" or "p/q" strings; nothing in the UI
 * may pass them through a float.  Parsing normalizes to the same canonical
 * form the server uses (gcd-reduced, positive denominator), so every
 * displayed number round-trips unchanged.
 */

export interface Rational {
  num: bigint;
  den: bigint;
}

const PATTERN = /^\s*(-?\d+)(?:\/(\d+))?\s*$/;

function gcd(a: bigint, b: bigint): bigint {
  a = a < 0n ? -a : a;
  while (b !== 0n) {
    [a, b] = [b, a % b];
  }
  return a;
}

/** Parse "n" or "p/q" (q > 0); null for anything else, including decimals. */
export function parseRational(text: string): Rational | null {
  const match = PATTERN.exec(text);
  if (match === null) return null;
  const num = BigInt(match[1]!);
  if (match[2] === undefined) return { num, den: 1n };
  const den = BigInt(match[2]);
  if (den === 0n) return null;
  const g = gcd(num, den);
  return g === 0n ? { num: 0n, den: 1n } : { num: num / g, den: den / g };
}

export function formatRational(value: Rational): string {
  return value.den === 1n ? value.num.toString() : `${value.num}/${value.den}`;
}

export function isRationalString(text: string): boolean {
  return parseRational(text) !== null;
}

/** Canonical display form of a wire rational; input must already be valid. */
export function canonical(text: string): string {
  const parsed = parseRational(text);
  if (parsed === null) throw new Error(`not a rational: ${text}`);
  return formatRational(parsed);
}

export function ratEquals(a: string, b: string): boolean {
  const pa = parseRational(a);
  const pb = parseRational(b);
  if (pa === null || pb === null) return false;
  return pa.num === pb.num && pa.den === pb.den;
}

/** Numeric comparison for plotting and sorting; exact cross-multiplication. */
export function ratCompare(a: string, b: string): number {
  const pa = parseRational(a);
  const pb = parseRational(b);
  if (pa === null || pb === null) throw new Error("not rationals");
  const left = pa.num * pb.den;
  const right = pb.num * pa.den;
  return left < right ? -1 : left > right ? 1 : 0;
}

/** Float approximation - used ONLY for scatter-plot pixel placement. */
export function ratToNumber(text: string): number {
  const parsed = parseRational(text);
  if (parsed === null) throw new Error(`not a rational: ${text}`);
  return Number(parsed.num) / Number(parsed.den);
}
