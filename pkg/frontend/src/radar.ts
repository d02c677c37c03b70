/** Radar-chart model: four fixed axes fed straight from a scorecard. */

import type { ScoreCard } from "./api.js";
import { label } from "./i18n.js";

export const RADAR_AXES = [
  "competence",
  "cohesiveness",
  "user_repetition",
  "concept_repetition",
] as const;

export type RadarAxisKey = (typeof RADAR_AXES)[number];

export interface RadarAxis {
  key: RadarAxisKey;
  label: string;
  value: number;
}

export interface RadarModel {
  axes: [RadarAxis, RadarAxis, RadarAxis, RadarAxis];
}

function clamp01(value: number): number {
  if (Number.isNaN(value)) return 0;
  return value < 0 ? 0 : value > 1 ? 1 : value;
}

/** Chart the four normalized metrics, in fixed order, clamped to [0,1]. */
export function buildRadarModel(card: ScoreCard): RadarModel {
  const axes = RADAR_AXES.map((key) => ({
    key,
    label: label(key),
    value: clamp01(card.normalized[key]),
  }));
  return { axes: axes as RadarModel["axes"] };
}

/** Vertex positions, one per axis, starting at 12 o'clock and going clockwise. */
export function radarPoints(
  model: RadarModel,
  cx: number,
  cy: number,
  radius: number,
): Array<[number, number]> {
  return model.axes.map((axis, i) => {
    const angle = -Math.PI / 2 + (i * 2 * Math.PI) / model.axes.length;
    return [
      cx + radius * axis.value * Math.cos(angle),
      cy + radius * axis.value * Math.sin(angle),
    ];
  });
}

/** SVG `points` attribute for the scorecard polygon. */
export function radarPolygon(
  model: RadarModel,
  cx: number,
  cy: number,
  radius: number,
): string {
  return radarPoints(model, cx, cy, radius)
    .map(([x, y]) => `${x},${y}`)
    .join(" ");
}
