"""Shared test oracles: brute-force tree membership and nearest-point search."""

from fractions import Fraction

from skeletron.points import Type2, path_distance
from skeletron.skeleton import SkeletonTree


def on_tree(p: Type2, tree: SkeletonTree) -> bool:
    """Membership of a type-2 point in the tree's realization."""
    placement = tree.placement
    for u, v, _ in tree.graph.edges:
        pu, pv = placement[u], placement[v]
        lo, hi = (pu, pv) if pu.s <= pv.s else (pv, pu)
        if lo.s <= p.s <= hi.s and Type2(hi.center, p.s) == p:
            return True
    for base, mark in tree.graph.rays:
        bp = placement[base]
        target = tree.ray_target[mark]
        if target.is_infinity():
            if p.s <= bp.s and Type2(tree.root_point().center, p.s) == p:
                return True
        else:
            if p.s >= bp.s and Type2(target.value, p.s) == p:
                return True
    return any(p == q for q in placement.values())


def grid_points(tree: SkeletonTree, step=Fraction(1, 4), ray_extent=8):
    """Dense grid of type-2 points on edges and (truncated) rays."""
    pts = list(tree.placement.values())
    for u, v, _ in tree.graph.edges:
        pu, pv = tree.placement[u], tree.placement[v]
        lo, hi = (pu, pv) if pu.s <= pv.s else (pv, pu)
        s = lo.s
        while s <= hi.s:
            pts.append(Type2(hi.center, s))
            s += step
    for base, mark in tree.graph.rays:
        bp = tree.placement[base]
        target = tree.ray_target[mark]
        for k in range(1, int(ray_extent / step) + 1):
            if target.is_infinity():
                pts.append(Type2(tree.root_point().center, bp.s - k * step))
            else:
                pts.append(Type2(target.value, bp.s + k * step))
    return pts


def brute_nearest(x: Type2, tree: SkeletonTree, step=Fraction(1, 4)):
    """Grid minimizer of the path distance from x to the tree."""
    return min(grid_points(tree, step), key=lambda p: path_distance(x, p))
