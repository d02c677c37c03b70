/** DOM wiring: one store, render-on-change, no state in the DOM. */

import { SwatApi, type RankedTeam, type SuggestionHit } from "./api.js";
import { buildGraphView } from "./graphview.js";
import { label } from "./i18n.js";
import { buildRadarModel, radarPoints, radarPolygon, RADAR_AXES } from "./radar.js";
import { UiStore, SLIDER_MAX, type SliderWeights, type UiState } from "./state.js";

const api = new SwatApi("");
const store = new UiStore(api);

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  cls?: string,
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (cls) node.className = cls;
  if (text !== undefined) node.textContent = text;
  return node;
}

function byId<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing #${id}`);
  return node as T;
}

const fmt = (value: number) => value.toFixed(4);

// --- concept picker -----------------------------------------------------

function wireConceptPicker(): void {
  const input = byId<HTMLInputElement>("concept-query");
  const dropdown = byId<HTMLUListElement>("concept-suggestions");
  let timer: ReturnType<typeof setTimeout> | null = null;

  const renderHits = (hits: SuggestionHit[]) => {
    dropdown.replaceChildren(
      ...hits.map((hit) => {
        const item = el("li", "suggestion", `${hit.name} (${hit.area})`);
        item.addEventListener("mousedown", () => {
          store.addArea(hit.area);
          input.value = "";
          dropdown.replaceChildren();
        });
        return item;
      }),
    );
  };

  input.addEventListener("input", () => {
    if (timer !== null) clearTimeout(timer);
    const q = input.value.trim();
    if (!q) {
      dropdown.replaceChildren();
      return;
    }
    timer = setTimeout(() => {
      api.suggest(q, 8).then(renderHits, () => dropdown.replaceChildren());
    }, 150);
  });
}

function renderAreaChips(state: UiState): void {
  const chips = byId<HTMLDivElement>("area-chips");
  chips.replaceChildren(
    ...state.selectedAreas.map((area) => {
      const chip = el("span", "chip", area + " ");
      const x = el("button", "chip-x", "×");
      x.addEventListener("click", () => store.removeArea(area));
      chip.appendChild(x);
      return chip;
    }),
  );
}

// --- sliders ------------------------------------------------------------

function wireSliders(): void {
  for (const axis of RADAR_AXES) {
    const slider = byId<HTMLInputElement>(`slider-${axis}`);
    slider.max = String(SLIDER_MAX);
    slider.addEventListener("input", () => {
      store.setSlider(axis as keyof SliderWeights, Number(slider.value));
    });
  }
  byId<HTMLSelectElement>("mode-select").addEventListener("change", (event) => {
    store.setMode((event.target as HTMLSelectElement).value as "avg" | "max");
  });
}

function renderSliders(state: UiState): void {
  for (const axis of RADAR_AXES) {
    const slider = byId<HTMLInputElement>(`slider-${axis}`);
    const value = state.sliders[axis];
    if (slider.value !== String(value)) slider.value = String(value);
    byId<HTMLSpanElement>(`slider-${axis}-value`).textContent = String(value);
  }
}

// --- ranked list ----------------------------------------------------------

function teamRow(team: RankedTeam, index: number): HTMLLIElement {
  const row = el("li", "team-row");
  const names = team.members.map((m) => m.name).join(", ");
  row.appendChild(el("span", "team-rank", `#${index + 1}`));
  row.appendChild(el("span", "team-members", names));
  row.appendChild(
    el("span", "team-total", `${label("total")} ${fmt(team.scorecard.total)}`),
  );
  const axes = el("span", "team-axes");
  for (const key of RADAR_AXES) {
    axes.appendChild(el("span", "axis", `${label(key)} ${fmt(team.scorecard.normalized[key])}`));
  }
  row.appendChild(axes);
  row.addEventListener("click", () => store.openTeam(team));
  return row;
}

function renderRanking(state: UiState): void {
  const banner = byId<HTMLDivElement>("error-banner");
  if (state.errorBanner) {
    banner.hidden = false;
    banner.textContent = state.rankingStale
      ? `${state.errorBanner} — ${label("stale_results")}`
      : state.errorBanner;
  } else {
    banner.hidden = true;
  }
  byId<HTMLDivElement>("pending").hidden = !state.pending;
  const list = byId<HTMLOListElement>("team-list");
  list.classList.toggle("stale", state.rankingStale);
  list.replaceChildren(...state.ranked.map((team, i) => teamRow(team, i)));
}

// --- editor ---------------------------------------------------------------

function wireEditor(): void {
  const input = byId<HTMLInputElement>("roster-input");
  byId<HTMLButtonElement>("roster-add").addEventListener("click", () => {
    if (input.value.trim()) {
      store.addRosterMember(input.value);
      input.value = "";
    }
  });
}

function renderEditor(state: UiState): void {
  const chips = byId<HTMLDivElement>("roster-chips");
  chips.replaceChildren(
    ...state.roster.map((id) => {
      const chip = el("span", "chip", id + " ");
      const x = el("button", "chip-x", "×");
      x.addEventListener("click", () => store.removeRosterMember(id));
      chip.appendChild(x);
      return chip;
    }),
  );
  const fieldError = byId<HTMLDivElement>("roster-error");
  fieldError.hidden = !state.rosterFieldError;
  fieldError.textContent = state.rosterFieldError ?? "";

  renderRadar(state);
  renderGraph(state);
}

const SVG_NS = "http://www.w3.org/2000/svg";

function renderRadar(state: UiState): void {
  const svg = byId<HTMLElement>("radar-chart");
  svg.replaceChildren();
  const hint = byId<HTMLDivElement>("radar-empty");
  hint.hidden = state.score !== null;
  hint.textContent = label("empty_roster");
  if (!state.score) return;

  const model = buildRadarModel(state.score.scorecard);
  const cx = 160;
  const cy = 160;
  const r = 120;
  for (const ring of [0.25, 0.5, 0.75, 1]) {
    const circle = document.createElementNS(SVG_NS, "circle");
    circle.setAttribute("cx", String(cx));
    circle.setAttribute("cy", String(cy));
    circle.setAttribute("r", String(r * ring));
    circle.setAttribute("class", "radar-ring");
    svg.appendChild(circle);
  }
  const polygon = document.createElementNS(SVG_NS, "polygon");
  polygon.setAttribute("points", radarPolygon(model, cx, cy, r));
  polygon.setAttribute("class", "radar-polygon");
  svg.appendChild(polygon);

  const unit = { axes: model.axes.map((a) => ({ ...a, value: 1 })) } as typeof model;
  radarPoints(unit, cx, cy, r + 16).forEach(([x, y], i) => {
    const axis = model.axes[i]!;
    const text = document.createElementNS(SVG_NS, "text");
    text.setAttribute("x", String(x));
    text.setAttribute("y", String(y));
    text.setAttribute("class", "radar-label");
    text.textContent = `${axis.label} ${fmt(axis.value)}`;
    svg.appendChild(text);
  });
}

function renderGraph(state: UiState): void {
  const svg = byId<HTMLElement>("graph-view");
  svg.replaceChildren();
  if (!state.score) return;

  const view = buildGraphView(state.score, 320, 320);
  const at = new Map(view.nodes.map((n) => [n.id, n]));
  for (const edge of view.edges) {
    const a = at.get(edge.source);
    const b = at.get(edge.target);
    if (!a || !b) continue;
    const line = document.createElementNS(SVG_NS, "line");
    line.setAttribute("x1", String(a.x));
    line.setAttribute("y1", String(a.y));
    line.setAttribute("x2", String(b.x));
    line.setAttribute("y2", String(b.y));
    line.setAttribute("class", edge.distance === null ? "edge unreachable" : "edge");
    svg.appendChild(line);
    const text = document.createElementNS(SVG_NS, "text");
    text.setAttribute("x", String((a.x + b.x) / 2));
    text.setAttribute("y", String((a.y + b.y) / 2 - 4));
    text.setAttribute("class", "edge-label");
    text.textContent = edge.label;
    svg.appendChild(text);
  }
  for (const node of view.nodes) {
    const circle = document.createElementNS(SVG_NS, "circle");
    circle.setAttribute("cx", String(node.x));
    circle.setAttribute("cy", String(node.y));
    circle.setAttribute("r", "16");
    circle.setAttribute("class", "node");
    svg.appendChild(circle);
    const text = document.createElementNS(SVG_NS, "text");
    text.setAttribute("x", String(node.x));
    text.setAttribute("y", String(node.y + 30));
    text.setAttribute("class", "node-label");
    text.textContent = node.name;
    svg.appendChild(text);
  }
}

// --- boot -----------------------------------------------------------------

function render(state: UiState): void {
  renderAreaChips(state);
  renderSliders(state);
  renderRanking(state);
  renderEditor(state);
}

wireConceptPicker();
wireSliders();
wireEditor();
store.subscribe(render);
render(store.getState());
