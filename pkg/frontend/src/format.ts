/**
 * Number presentation, mirroring the CLI: up to five decimals with trailing
 * zeros trimmed. Formatting is the only thing the client ever does to a
 * number; values themselves always come from service responses untouched.
 */

export const formatScore = (value: number): string => {
  const fixed = value.toFixed(5);
  const trimmed = fixed.replace(/0+$/, '').replace(/\.$/, '');
  return trimmed === '' || trimmed === '-' ? '0' : trimmed;
};

export const formatTuple = (values: number[]): string =>
  `(${values.map(formatScore).join(', ')})`;

export const formatDelta = (value: number): string => {
  const body = formatScore(Math.abs(value));
  if (body === '0') return '0';
  return value > 0 ? `+${body}` : `-${body}`;
};
