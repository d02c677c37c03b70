/** Social-graph view model for one scored team.
 *
 * Nodes are the team members, edges the member pairs, and each edge label
 * is exactly the hop distance the score endpoint reported for that pair —
 * the view invents no numbers of its own.
 */

import type { ScoreResponse } from "./api.js";
import { label } from "./i18n.js";

export interface GraphNode {
  id: string;
  name: string;
  x: number;
  y: number;
}

export interface GraphEdge {
  source: string;
  target: string;
  distance: number | null;
  label: string;
}

export interface GraphViewModel {
  nodes: GraphNode[];
  edges: GraphEdge[];
}

export function edgeLabel(distance: number | null): string {
  return distance === null ? label("unreachable") : String(distance);
}

/** Members on a circle (response order), one edge per reported pair. */
export function buildGraphView(
  score: ScoreResponse,
  width = 320,
  height = 320,
): GraphViewModel {
  const cx = width / 2;
  const cy = height / 2;
  const r = Math.min(width, height) / 2 - 28;
  const count = score.members.length;
  const nodes = score.members.map((member, i) => {
    const angle = -Math.PI / 2 + (i * 2 * Math.PI) / Math.max(count, 1);
    return {
      id: member.id,
      name: member.name,
      x: cx + r * Math.cos(angle),
      y: cy + r * Math.sin(angle),
    };
  });
  const edges = score.distances.map((pair) => ({
    source: pair.source,
    target: pair.target,
    distance: pair.distance,
    label: edgeLabel(pair.distance),
  }));
  return { nodes, edges };
}
