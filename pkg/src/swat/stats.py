"""Knowledge-base statistics: entity counts and author-count distributions."""

from __future__ import annotations

from collections import Counter
from dataclasses import asdict, dataclass

from swat.model import GraphSnapshot


@dataclass(frozen=True, slots=True)
class CorpusStats:
    individuals_count: int
    concepts_count: int
    teams_count: int
    avg_connections_per_individual: float
    avg_individuals_per_team: float
    max_individuals_per_team: int
    organizations_count: int
    countries_count: int
    # Distributions over *all* publications, single-author ones included.
    authors_histogram: dict[int, int]
    authors_cdf: dict[int, float]
    yearly_single_author_pct: dict[int, float]
    yearly_max_authors: dict[int, int]

    def as_dict(self) -> dict:
        return asdict(self)


def compute_stats(snapshot: GraphSnapshot) -> CorpusStats:
    """Counts and distribution series for a snapshot.

    Connections per individual are distinct undirected social neighbors
    across every dimension; isolated individuals count 0 and stay in the
    denominator.  An empty snapshot yields zeros and empty maps.
    """
    n_individuals = len(snapshot.individuals)
    if n_individuals:
        avg_connections = (
            sum(len(snapshot.neighbors(i)) for i in snapshot.individuals) / n_individuals
        )
    else:
        avg_connections = 0.0

    team_sizes = [len(t.members) for t in snapshot.history_teams]
    avg_team = sum(team_sizes) / len(team_sizes) if team_sizes else 0.0
    max_team = max(team_sizes, default=0)

    organizations = {
        org for ind in snapshot.individuals.values() for org in ind.affiliations
    }
    countries = {
        ind.country for ind in snapshot.individuals.values() if ind.country
    }

    histogram = Counter(len(p.authors) for p in snapshot.publications)
    total_pubs = sum(histogram.values())
    cdf: dict[int, float] = {}
    running = 0
    for count in sorted(histogram):
        running += histogram[count]
        cdf[count] = running / total_pubs

    by_year: dict[int, list[int]] = {}
    for pub in snapshot.publications:
        by_year.setdefault(pub.year, []).append(len(pub.authors))
    yearly_single = {
        year: sum(1 for c in counts if c == 1) / len(counts)
        for year, counts in sorted(by_year.items())
    }
    yearly_max = {year: max(counts) for year, counts in sorted(by_year.items())}

    return CorpusStats(
        individuals_count=n_individuals,
        concepts_count=len(snapshot.areas),
        teams_count=len(snapshot.history_teams),
        avg_connections_per_individual=avg_connections,
        avg_individuals_per_team=avg_team,
        max_individuals_per_team=max_team,
        organizations_count=len(organizations),
        countries_count=len(countries),
        authors_histogram=dict(sorted(histogram.items())),
        authors_cdf=cdf,
        yearly_single_author_pct=yearly_single,
        yearly_max_authors=yearly_max,
    )
