/** UI store: slider-driven recompute and server-authoritative scoring.
 *
 * Contracts kept here:
 *  - slider values are stored 0–100 exactly as rendered; they are turned
 *    into normalized weight fractions only when a request body is built;
 *  - one settled slider interaction issues exactly one recommend request
 *    (300 ms debounce) and at most one request is ever in flight — a newly
 *    issued one aborts its predecessor;
 *  - the ranked list re-renders in server order and is never re-sorted;
 *  - on failure the previous list stays up, flagged stale, with a banner;
 *  - every displayed number is copied from an API response.
 */

import {
  ApiError,
  type MetricVector,
  type RankedTeam,
  type ScoreResponse,
  type SwatApi,
} from "./api.js";
import { addMember, removeMember } from "./editor.js";
import { label } from "./i18n.js";

export const DEBOUNCE_MS = 300;
export const SLIDER_MAX = 100;

export interface SliderWeights {
  competence: number;
  cohesiveness: number;
  user_repetition: number;
  concept_repetition: number;
}

export interface UiState {
  selectedAreas: string[];
  sliders: SliderWeights;
  mode: "avg" | "max";
  k: number;
  limit: number;
  ranked: RankedTeam[];
  rankingStale: boolean;
  pending: boolean;
  errorBanner: string | null;
  roster: string[];
  rosterFieldError: string | null;
  score: ScoreResponse | null;
}

function initialState(): UiState {
  return {
    selectedAreas: [],
    sliders: {
      competence: 25,
      cohesiveness: 25,
      user_repetition: 25,
      concept_repetition: 25,
    },
    mode: "avg",
    k: 10,
    limit: 20,
    ranked: [],
    rankingStale: false,
    pending: false,
    errorBanner: null,
    roster: [],
    rosterFieldError: null,
    score: null,
  };
}

/** Slider positions → weight fractions summing to 1; null when all zero. */
export function weightsBody(sliders: SliderWeights): MetricVector | null {
  const total =
    sliders.competence +
    sliders.cohesiveness +
    sliders.user_repetition +
    sliders.concept_repetition;
  if (total <= 0) return null;
  return {
    competence: sliders.competence / total,
    cohesiveness: sliders.cohesiveness / total,
    user_repetition: sliders.user_repetition / total,
    concept_repetition: sliders.concept_repetition / total,
  };
}

function isAbort(error: unknown): boolean {
  return error instanceof Error && error.name === "AbortError";
}

export class UiStore {
  private state: UiState = initialState();
  private listeners = new Set<(state: UiState) => void>();
  private debounceTimer: ReturnType<typeof setTimeout> | null = null;
  private recommendInflight: AbortController | null = null;
  private scoreInflight: AbortController | null = null;

  constructor(
    private readonly api: SwatApi,
    private readonly debounceMs: number = DEBOUNCE_MS,
  ) {}

  getState(): UiState {
    return this.state;
  }

  subscribe(listener: (state: UiState) => void): () => void {
    this.listeners.add(listener);
    return () => this.listeners.delete(listener);
  }

  private set(patch: Partial<UiState>): void {
    this.state = { ...this.state, ...patch };
    for (const listener of this.listeners) listener(this.state);
  }

  // --- concept selection + sliders -------------------------------------

  setAreas(areas: string[]): void {
    const unique = [...new Set(areas.map((a) => a.trim()).filter(Boolean))];
    this.set({ selectedAreas: unique });
    this.scheduleRecompute();
  }

  addArea(area: string): void {
    if (this.state.selectedAreas.includes(area)) return;
    this.setAreas([...this.state.selectedAreas, area]);
  }

  removeArea(area: string): void {
    this.setAreas(this.state.selectedAreas.filter((a) => a !== area));
  }

  setSlider(axis: keyof SliderWeights, value: number): void {
    this.set({ sliders: { ...this.state.sliders, [axis]: value } });
    this.scheduleRecompute();
  }

  setMode(mode: "avg" | "max"): void {
    this.set({ mode });
    this.scheduleRecompute();
  }

  /** Restart the debounce window; only the settled interaction fires. */
  private scheduleRecompute(): void {
    if (this.debounceTimer !== null) clearTimeout(this.debounceTimer);
    this.debounceTimer = setTimeout(() => {
      this.debounceTimer = null;
      void this.recomputeNow();
    }, this.debounceMs);
  }

  // --- recommend --------------------------------------------------------

  async recomputeNow(): Promise<void> {
    if (this.debounceTimer !== null) {
      clearTimeout(this.debounceTimer);
      this.debounceTimer = null;
    }
    if (this.state.selectedAreas.length === 0) return;

    const weights = weightsBody(this.state.sliders);
    if (weights === null) {
      this.set({ errorBanner: label("zero_weights"), rankingStale: true });
      return;
    }

    this.recommendInflight?.abort();
    const controller = new AbortController();
    this.recommendInflight = controller;
    this.set({ pending: true });
    try {
      const response = await this.api.recommend(
        {
          areas: this.state.selectedAreas,
          k: this.state.k,
          weights,
          mode: this.state.mode,
          limit: this.state.limit,
        },
        controller.signal,
      );
      if (this.recommendInflight !== controller) return;
      this.recommendInflight = null;
      this.set({
        ranked: response.teams,
        rankingStale: false,
        pending: false,
        errorBanner: null,
      });
    } catch (error) {
      if (isAbort(error) || this.recommendInflight !== controller) return;
      this.recommendInflight = null;
      const message =
        error instanceof ApiError ? error.message : label("recommend_failed");
      this.set({ pending: false, errorBanner: message, rankingStale: true });
    }
  }

  // --- team editor -------------------------------------------------------

  /** Load a ranked team into the editor and score it as-is. */
  openTeam(team: RankedTeam): void {
    this.set({ roster: team.members.map((m) => m.id), rosterFieldError: null });
    void this.rescore();
  }

  addRosterMember(id: string): void {
    const roster = addMember(this.state.roster, id);
    this.set({ roster, rosterFieldError: null });
    void this.rescore();
  }

  removeRosterMember(id: string): void {
    const roster = removeMember(this.state.roster, id);
    this.set({ roster, rosterFieldError: null });
    void this.rescore();
  }

  clearRoster(): void {
    this.set({ roster: [], rosterFieldError: null, score: null });
  }

  private async rescore(): Promise<void> {
    if (this.state.roster.length === 0) {
      this.set({ score: null });
      return;
    }
    if (this.state.selectedAreas.length === 0) return;

    this.scoreInflight?.abort();
    const controller = new AbortController();
    this.scoreInflight = controller;
    const weights = weightsBody(this.state.sliders) ?? undefined;
    try {
      const response = await this.api.score(
        {
          members: this.state.roster,
          areas: this.state.selectedAreas,
          weights,
          mode: this.state.mode,
        },
        controller.signal,
      );
      if (this.scoreInflight !== controller) return;
      this.scoreInflight = null;
      this.set({ score: response, rosterFieldError: null });
    } catch (error) {
      if (isAbort(error) || this.scoreInflight !== controller) return;
      this.scoreInflight = null;
      if (error instanceof ApiError && error.code === "unknown_individual") {
        this.set({ rosterFieldError: error.message });
      } else {
        const message =
          error instanceof ApiError ? error.message : label("recommend_failed");
        this.set({ errorBanner: message });
      }
    }
  }
}
