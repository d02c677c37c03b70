/** The single string table; every user-facing label is looked up here. */

export const LABELS = {
  competence: "Competence",
  cohesiveness: "Social cohesiveness",
  user_repetition: "User repetition",
  concept_repetition: "Concept repetition",
  unreachable: "∞",
  recommend_failed: "Could not refresh recommendations",
  stale_results: "showing previous results",
  zero_weights: "At least one metric weight must be above zero",
  empty_roster: "Add members to score a team",
  total: "Total",
} as const;

export type LabelKey = keyof typeof LABELS;

export function label(key: LabelKey): string {
  return LABELS[key];
}
