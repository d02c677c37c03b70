import { describe, expect, test } from "vitest";

import { LABELS } from "../src/i18n.js";
import { buildRadarModel, radarPoints, radarPolygon, RADAR_AXES } from "../src/radar.js";
import { makeCard } from "./helpers.js";

const CX = 100;
const CY = 100;
const R = 80;

function radii(points: Array<[number, number]>): number[] {
  return points.map(([x, y]) => Math.hypot(x - CX, y - CY));
}

describe("radar model", () => {
  test("axes come in fixed order with labels from the string table", () => {
    const model = buildRadarModel(
      makeCard({ competence: 0.1, cohesiveness: 0.2, user_repetition: 0.3, concept_repetition: 0.4 }),
    );
    expect(model.axes.map((a) => a.key)).toEqual([
      "competence",
      "cohesiveness",
      "user_repetition",
      "concept_repetition",
    ]);
    expect(model.axes.map((a) => a.label)).toEqual(RADAR_AXES.map((k) => LABELS[k]));
    expect(model.axes.map((a) => a.value)).toEqual([0.1, 0.2, 0.3, 0.4]);
  });

  test("values are clamped to [0,1] and NaN collapses to 0", () => {
    const model = buildRadarModel(
      makeCard({ competence: -0.2, cohesiveness: 1.7, user_repetition: NaN, concept_repetition: 0.5 }),
    );
    expect(model.axes.map((a) => a.value)).toEqual([0, 1, 0, 0.5]);
  });

  test("an all-zero card degenerates to the origin", () => {
    const model = buildRadarModel(
      makeCard({ competence: 0, cohesiveness: 0, user_repetition: 0, concept_repetition: 0 }),
    );
    const points = radarPoints(model, CX, CY, R);
    for (const [x, y] of points) {
      expect(x).toBeCloseTo(CX, 10);
      expect(y).toBeCloseTo(CY, 10);
    }
    expect(radarPolygon(model, CX, CY, R).split(" ")).toHaveLength(4);
  });

  test("a full card touches every axis tip", () => {
    const model = buildRadarModel(
      makeCard({ competence: 1, cohesiveness: 1, user_repetition: 1, concept_repetition: 1 }),
    );
    for (const radius of radii(radarPoints(model, CX, CY, R))) {
      expect(radius).toBeCloseTo(R, 10);
    }
  });

  test("vertex radii equal the card values scaled by the chart radius", () => {
    const values = {
      competence: 0.6,
      cohesiveness: 0.8333,
      user_repetition: 0.5,
      concept_repetition: 0.3333,
    };
    const model = buildRadarModel(makeCard(values));
    const rs = radii(radarPoints(model, CX, CY, R));
    expect(rs[0]).toBeCloseTo(0.6 * R, 10);
    expect(rs[1]).toBeCloseTo(0.8333 * R, 10);
    expect(rs[2]).toBeCloseTo(0.5 * R, 10);
    expect(rs[3]).toBeCloseTo(0.3333 * R, 10);
  });

  test("the first axis points straight up and order proceeds clockwise", () => {
    const model = buildRadarModel(
      makeCard({ competence: 1, cohesiveness: 1, user_repetition: 1, concept_repetition: 1 }),
    );
    const [top, right, bottom, left] = radarPoints(model, CX, CY, R);
    expect(top![0]).toBeCloseTo(CX, 8);
    expect(top![1]).toBeCloseTo(CY - R, 8);
    expect(right![0]).toBeCloseTo(CX + R, 8);
    expect(bottom![1]).toBeCloseTo(CY + R, 8);
    expect(left![0]).toBeCloseTo(CX - R, 8);
  });
});
