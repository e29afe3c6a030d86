"""Feed-forward network regressor trained with Adam.

Hidden layers use ReLU, the single output a sigmoid, so targets are min-max
scaled to [0, 1] before training and predictions are scaled back. The loss
is half the mean squared error plus an L2 penalty on the weights.

Date:
    10.19.2026

"""


__all__ = [
    "DEFAULT_HIDDEN",
    "MlpModel",
    "glorot_init",
    "forward",
    "loss_and_gradients",
    "pack",
    "unpack",
    "scale_target",
    "unscale_target",
    "Adam",
    "fit_mlp",
]


import logging
from dataclasses import dataclass, field
from typing import ClassVar, List, Sequence, Tuple

import numpy as np

from hems.errors import DivergenceError, InsufficientDataError, ValidationError

from .features import SupervisedDataset
from .models import ForecastModel, feature_bounds


logger = logging.getLogger(__name__)


DEFAULT_HIDDEN = (10, 5)

Params = Tuple[List[np.ndarray], List[np.ndarray]]


def _sigmoid(z: np.ndarray) -> np.ndarray:
    return 0.5 * (1.0 + np.tanh(0.5 * z))


def glorot_init(layer_sizes: Sequence[int], rng: np.random.Generator) -> Params:
    weights, biases = [], []
    for fan_in, fan_out in zip(layer_sizes[:-1], layer_sizes[1:]):
        bound = np.sqrt(6.0 / (fan_in + fan_out))
        weights.append(rng.uniform(-bound, bound, size=(fan_in, fan_out)))
        biases.append(rng.uniform(-bound, bound, size=fan_out))
    return weights, biases


def forward(weights: Sequence[np.ndarray], biases: Sequence[np.ndarray],
            X: np.ndarray) -> List[np.ndarray]:
    """Activations of every layer, input first and output last."""
    activations = [np.asarray(X, dtype=float)]
    last = len(weights) - 1
    for i, (W, b) in enumerate(zip(weights, biases)):
        z = activations[-1] @ W + b
        activations.append(_sigmoid(z) if i == last else np.maximum(z, 0.0))
    return activations


def loss_and_gradients(weights: Sequence[np.ndarray], biases: Sequence[np.ndarray],
                       X: np.ndarray, y: np.ndarray, alpha: float):
    """Total loss, data loss and the analytic gradients of the total loss."""
    n = X.shape[0]
    acts = forward(weights, biases, X)
    out = acts[-1].reshape(-1)
    err = out - y
    data_loss = 0.5 * float(np.mean(err ** 2))
    penalty = 0.5 * alpha * sum(float(np.sum(W ** 2)) for W in weights) / n

    grad_w = [np.empty_like(W) for W in weights]
    grad_b = [np.empty_like(b) for b in biases]
    delta = (err * out * (1.0 - out) / n).reshape(-1, 1)
    for i in range(len(weights) - 1, -1, -1):
        grad_w[i] = acts[i].T @ delta + alpha * weights[i] / n
        grad_b[i] = delta.sum(axis=0)
        if i:
            delta = (delta @ weights[i].T) * (acts[i] > 0.0)
    return data_loss + penalty, data_loss, grad_w, grad_b


def pack(weights: Sequence[np.ndarray], biases: Sequence[np.ndarray]) -> np.ndarray:
    return np.concatenate([a.ravel() for pair in zip(weights, biases) for a in pair])


def unpack(theta: np.ndarray, layer_sizes: Sequence[int]) -> Params:
    weights, biases, pos = [], [], 0
    for fan_in, fan_out in zip(layer_sizes[:-1], layer_sizes[1:]):
        weights.append(theta[pos:pos + fan_in * fan_out].reshape(fan_in, fan_out))
        pos += fan_in * fan_out
        biases.append(theta[pos:pos + fan_out].copy())
        pos += fan_out
    return weights, biases


def scale_target(y: np.ndarray) -> Tuple[np.ndarray, float, float]:
    """Min-max scale; a target with a single distinct value maps to 0.5."""
    y = np.asarray(y, dtype=float)
    lo, hi = float(y.min()), float(y.max())
    if hi == lo:
        return np.full_like(y, 0.5), lo, hi
    return (y - lo) / (hi - lo), lo, hi


def unscale_target(out: np.ndarray, lo: float, hi: float) -> np.ndarray:
    if hi == lo:
        return np.full_like(np.asarray(out, dtype=float), lo)
    return lo + np.asarray(out, dtype=float) * (hi - lo)


class Adam:
    """Adaptive moment estimation over a list of parameter arrays."""

    def __init__(self, params: Sequence[np.ndarray], learning_rate: float = 1e-3,
                 beta1: float = 0.9, beta2: float = 0.999, epsilon: float = 1e-8) -> None:
        self.learning_rate = learning_rate
        self.beta1 = beta1
        self.beta2 = beta2
        self.epsilon = epsilon
        self.t = 0
        self.m = [np.zeros_like(p) for p in params]
        self.v = [np.zeros_like(p) for p in params]

    def step(self, params: Sequence[np.ndarray], grads: Sequence[np.ndarray]) -> None:
        self.t += 1
        lr = (self.learning_rate * np.sqrt(1.0 - self.beta2 ** self.t)
              / (1.0 - self.beta1 ** self.t))
        for p, g, m, v in zip(params, grads, self.m, self.v):
            m *= self.beta1
            m += (1.0 - self.beta1) * g
            v *= self.beta2
            v += (1.0 - self.beta2) * g ** 2
            p -= lr * m / (np.sqrt(v) + self.epsilon)


@dataclass
class MlpModel(ForecastModel):
    """Layer weights of the network and the target scaling."""

    kind: ClassVar[str] = "mlp"

    weights: List[np.ndarray] = field(default_factory=list)
    biases: List[np.ndarray] = field(default_factory=list)
    target_min: float = 0.0
    target_max: float = 1.0
    loss_curve: List[float] = field(default_factory=list)

    @property
    def layer_sizes(self) -> Tuple[int, ...]:
        return (self.weights[0].shape[0],) + tuple(W.shape[1] for W in self.weights)

    def _predict_scaled(self, X: np.ndarray) -> np.ndarray:
        out = forward(self.weights, self.biases, X)[-1].reshape(-1)
        return unscale_target(out, self.target_min, self.target_max)


def fit_mlp(data: SupervisedDataset,
            hidden: Sequence[int] = DEFAULT_HIDDEN,
            seed: int = 42,
            *,
            max_iter: int = 4000,
            learning_rate: float = 1e-3,
            alpha: float = 1e-4,
            batch_size: int = 200,
            shuffle: bool = True) -> MlpModel:
    """Train the network for ``max_iter`` epochs of mini-batch Adam.

    ``loss_curve`` holds the data loss (without the L2 term) of every epoch.
    """
    if max_iter < 1 or batch_size < 1 or learning_rate <= 0.0 or alpha < 0.0:
        raise ValidationError("max_iter, batch_size and learning_rate must be positive, alpha >= 0")
    X, y = data.X_train, data.y_train
    if X.shape[0] == 0:
        raise InsufficientDataError("cannot train a network on zero rows")
    lo, hi = feature_bounds(X)
    model = MlpModel(lo, hi)
    Xs = model.scale(X)
    ys, model.target_min, model.target_max = scale_target(y)

    rng = np.random.default_rng(seed)
    sizes = (Xs.shape[1],) + tuple(int(h) for h in hidden) + (1,)
    weights, biases = glorot_init(sizes, rng)
    params = [p for pair in zip(weights, biases) for p in pair]
    optimizer = Adam(params, learning_rate)
    n = Xs.shape[0]
    batch = min(batch_size, n)

    for epoch in range(1, max_iter + 1):
        order = rng.permutation(n) if shuffle else np.arange(n)
        total = 0.0
        for start in range(0, n, batch):
            idx = order[start:start + batch]
            _, data_loss, grad_w, grad_b = loss_and_gradients(weights, biases, Xs[idx], ys[idx], alpha)
            if not np.isfinite(data_loss):
                raise DivergenceError(epoch)
            total += data_loss * idx.shape[0]
            optimizer.step(params, [g for pair in zip(grad_w, grad_b) for g in pair])
        model.loss_curve.append(total / n)
    model.weights, model.biases = weights, biases
    logger.info("mlp layers=%s epochs=%d loss=%.6g", sizes, max_iter, model.loss_curve[-1])
    return model
