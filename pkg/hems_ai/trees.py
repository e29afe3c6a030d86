"""CART regression trees, the base learner of both ensembles.

Date:
    10.19.2026

"""


__all__ = [
    "RegressionTree",
    "resolve_max_features",
]


from dataclasses import dataclass
from typing import Optional, Union

import numpy as np
from sklearn.tree import DecisionTreeRegressor

from hems.errors import DomainError, InsufficientDataError


MaxFeatures = Union[None, str, int, float]


def resolve_max_features(rule: MaxFeatures) -> MaxFeatures:
    """Map a feature-subsampling rule to the tree learner's argument.

    ``"auto"`` means every feature for regression.
    """
    if rule is None or rule == "auto":
        return None
    if rule in ("sqrt", "log2"):
        return rule
    if isinstance(rule, (int, np.integer)) and rule >= 1:
        return int(rule)
    if isinstance(rule, float) and 0.0 < rule <= 1.0:
        return rule
    raise DomainError(f"unknown max_features rule {rule!r}")


@dataclass
class RegressionTree:
    """A fitted binary regression tree.

    Arguments:
        max_depth -- Depth limit; ``None`` grows until leaves are pure.
        min_samples_leaf -- Smallest admissible leaf.
        max_features -- Features drawn at every split.
        max_leaf_nodes -- Leaf limit, grown best-first.
        seed -- Seed of the split-feature draws.
    """

    max_depth: Optional[int] = None
    min_samples_leaf: int = 1
    max_features: MaxFeatures = None
    max_leaf_nodes: Optional[int] = None
    seed: int = 0

    def __post_init__(self) -> None:
        self._tree: Optional[DecisionTreeRegressor] = None

    def fit(self, X: np.ndarray, y: np.ndarray) -> "RegressionTree":
        X = np.asarray(X, dtype=float)
        y = np.asarray(y, dtype=float).reshape(-1)
        if X.shape[0] == 0:
            raise InsufficientDataError("cannot fit a tree on zero rows")
        self._tree = DecisionTreeRegressor(
            max_depth=self.max_depth,
            min_samples_leaf=self.min_samples_leaf,
            max_features=resolve_max_features(self.max_features),
            max_leaf_nodes=self.max_leaf_nodes,
            random_state=int(self.seed),
        ).fit(X, y)
        return self

    @property
    def fitted(self) -> DecisionTreeRegressor:
        if self._tree is None:
            raise DomainError("tree is not fitted")
        return self._tree

    def predict(self, X: np.ndarray) -> np.ndarray:
        return self.fitted.predict(np.asarray(X, dtype=float))

    @property
    def node_count(self) -> int:
        return int(self.fitted.tree_.node_count)

    @property
    def n_leaves(self) -> int:
        return int(self.fitted.get_n_leaves())

    @property
    def depth(self) -> int:
        return int(self.fitted.get_depth())

    def leaf_values(self) -> np.ndarray:
        structure = self.fitted.tree_
        leaves = structure.children_left == -1
        return structure.value[leaves].reshape(-1)

    def is_well_formed(self) -> bool:
        """Every internal node has two children and every leaf is finite."""
        structure = self.fitted.tree_
        left, right = structure.children_left, structure.children_right
        internal = left != -1
        if np.any(internal != (right != -1)):
            return False
        return bool(np.all(np.isfinite(self.leaf_values())))
