/** Pure roster-editing helpers for the team editor. */

export function addMember(roster: readonly string[], id: string): string[] {
  const trimmed = id.trim();
  if (!trimmed || roster.includes(trimmed)) return [...roster];
  return [...roster, trimmed];
}

export function removeMember(roster: readonly string[], id: string): string[] {
  return roster.filter((member) => member !== id);
}

/** Same member set, regardless of the order edits happened in. */
export function rosterEquals(a: readonly string[], b: readonly string[]): boolean {
  if (a.length !== b.length) return false;
  const sortedA = [...a].sort();
  const sortedB = [...b].sort();
  return sortedA.every((id, i) => id === sortedB[i]);
}
