# -*- coding: utf-8 -*-
from __future__ import unicode_literals

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from crumby.models.graph import Graph
from crumby.models.services.generator import GeneratorService
from crumby.models.services.graph import GraphService

PROPERTY_SETTINGS = settings(
    max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)


@st.composite
def subcubic_trees(draw, max_size=30):
    n = draw(st.integers(min_value=1, max_value=max_size))
    seed = draw(st.integers(min_value=0, max_value=10 ** 6))
    return GeneratorService.gen_random_subcubic_tree(n, seed=seed)


@st.composite
def cubic_bases(draw, sizes=(4, 6, 8)):
    n = draw(st.sampled_from(sizes))
    seed = draw(st.integers(min_value=0, max_value=10 ** 6))
    return GeneratorService.gen_random_cubic(n, seed=seed)


@st.composite
def subdivided_cubic(draw, min_count=1, max_count=4, sizes=(4, 6, 8)):
    base = draw(cubic_bases(sizes=sizes))
    counts = draw(
        st.lists(
            st.integers(min_value=min_count, max_value=max_count),
            min_size=base.edge_count,
            max_size=base.edge_count,
        )
    )
    return GraphService.subdivide(base, counts)


@st.composite
def outerplanar_graphs(draw, max_faces=4):
    first = draw(st.integers(min_value=3, max_value=8))
    rest = draw(
        st.lists(st.integers(min_value=4, max_value=8), max_size=max_faces - 1)
    )
    seed = draw(st.integers(min_value=0, max_value=10 ** 6))
    return GeneratorService.gen_fan_outerplanar([first] + rest, seed=seed)


@st.composite
def small_subcubic_graphs(draw, max_size=9):
    n = draw(st.integers(min_value=1, max_value=max_size))
    pairs = [(u, v) for v in range(n) for u in range(v)]
    chosen = draw(
        st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([])
    )
    degree = [0] * n
    edges = []
    for u, v in chosen:
        if degree[u] < 3 and degree[v] < 3:
            degree[u] += 1
            degree[v] += 1
            edges.append((u, v))
    return Graph.from_edges(n, edges)


@st.composite
def colorings_for(draw, g):
    colors = draw(
        st.lists(
            st.sampled_from("rb"), min_size=g.vertex_count, max_size=g.vertex_count
        )
    )
    return "".join(colors)


@st.composite
def subdivided_subcubic(draw, bases=None, max_count=6):
    """ subcubic base, trees included, with every edge subdivided """
    base = draw(bases if bases is not None else small_subcubic_graphs(max_size=8))
    counts = draw(
        st.lists(
            st.integers(min_value=1, max_value=max_count),
            min_size=base.edge_count,
            max_size=base.edge_count,
        )
    )
    return GraphService.subdivide(base, counts)
