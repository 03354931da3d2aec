"""Gradient-trained classifiers: multinomial logistic regression and a
one-hidden-layer perceptron.

Both train full batch with fixed epoch counts so results are a pure
function of the data and the seed. Score rows always sum to one.
"""

import math

import numpy as np


def _softmax(z):
    z = z - z.max(axis=1, keepdims=True)
    e = np.exp(z)
    return e / e.sum(axis=1, keepdims=True)


def _one_hot(codes, n_classes):
    out = np.zeros((codes.shape[0], n_classes), dtype=np.float64)
    out[np.arange(codes.shape[0]), codes] = 1.0
    return out


class LogisticRegression:
    """Softmax regression, full-batch gradient descent, L2 penalty."""

    name = "logreg"

    def __init__(self, lr=0.1, epochs=500, l2=1e-4):
        self.lr = lr
        self.epochs = epochs
        self.l2 = l2
        self.classes_ = None
        self.W = None
        self.b = None

    def loss_and_grad(self, X, codes, W, b):
        """Cross-entropy with L2 on W; returns (loss, grad_W, grad_b)."""
        n = X.shape[0]
        P = _softmax(X @ W + b)
        Y = _one_hot(codes, W.shape[1])
        eps = 1e-12
        loss = -np.log(P[np.arange(n), codes] + eps).mean()
        loss += 0.5 * self.l2 * float((W * W).sum())
        G = (P - Y) / n
        grad_W = X.T @ G + self.l2 * W
        grad_b = G.sum(axis=0)
        return loss, grad_W, grad_b

    def fit(self, X, y, seed=0):
        X = np.asarray(X, dtype=np.float64)
        self.classes_ = sorted(set(np.asarray(y).tolist()))
        index = {c: i for i, c in enumerate(self.classes_)}
        codes = np.array([index[v] for v in y])
        n_classes = len(self.classes_)
        self.W = np.zeros((X.shape[1], n_classes), dtype=np.float64)
        self.b = np.zeros(n_classes, dtype=np.float64)
        for _ in range(self.epochs):
            _, gW, gb = self.loss_and_grad(X, codes, self.W, self.b)
            self.W -= self.lr * gW
            self.b -= self.lr * gb
        return self

    def predict_scores(self, X):
        X = np.asarray(X, dtype=np.float64)
        return _softmax(X @ self.W + self.b)

    def predict(self, X):
        scores = self.predict_scores(X)
        return [self.classes_[i] for i in scores.argmax(axis=1)]

    def to_state(self):
        return {
            "lr": self.lr,
            "epochs": self.epochs,
            "l2": self.l2,
            "classes": self.classes_,
            "W": self.W.tolist(),
            "b": self.b.tolist(),
        }

    @classmethod
    def from_state(cls, state):
        model = cls(lr=state["lr"], epochs=state["epochs"], l2=state["l2"])
        model.classes_ = state["classes"]
        model.W = np.array(state["W"], dtype=np.float64)
        model.b = np.array(state["b"], dtype=np.float64)
        return model


def _sigmoid(z):
    return 1.0 / (1.0 + np.exp(-z))


class MLPClassifier:
    """One sigmoid hidden layer of ceil((D + L) / 2) units, softmax
    output, full-batch gradient descent with momentum."""

    name = "mlp"

    def __init__(self, lr=0.3, momentum=0.2, epochs=200):
        self.lr = lr
        self.momentum = momentum
        self.epochs = epochs
        self.classes_ = None
        self.W1 = self.b1 = self.W2 = self.b2 = None

    @staticmethod
    def hidden_units(n_features, n_classes):
        return math.ceil((n_features + n_classes) / 2)

    def _forward(self, X, params):
        W1, b1, W2, b2 = params
        H = _sigmoid(X @ W1 + b1)
        P = _softmax(H @ W2 + b2)
        return H, P

    def loss_and_grad(self, X, codes, params):
        W1, b1, W2, b2 = params
        n = X.shape[0]
        H, P = self._forward(X, params)
        Y = _one_hot(codes, W2.shape[1])
        eps = 1e-12
        loss = -np.log(P[np.arange(n), codes] + eps).mean()
        G2 = (P - Y) / n
        grad_W2 = H.T @ G2
        grad_b2 = G2.sum(axis=0)
        G1 = (G2 @ W2.T) * H * (1.0 - H)
        grad_W1 = X.T @ G1
        grad_b1 = G1.sum(axis=0)
        return loss, (grad_W1, grad_b1, grad_W2, grad_b2)

    def fit(self, X, y, seed=0):
        X = np.asarray(X, dtype=np.float64)
        self.classes_ = sorted(set(np.asarray(y).tolist()))
        index = {c: i for i, c in enumerate(self.classes_)}
        codes = np.array([index[v] for v in y])
        n_classes = len(self.classes_)
        n_hidden = self.hidden_units(X.shape[1], n_classes)
        rng = np.random.default_rng(seed)
        self.W1 = rng.uniform(-0.5, 0.5, size=(X.shape[1], n_hidden))
        self.b1 = rng.uniform(-0.5, 0.5, size=n_hidden)
        self.W2 = rng.uniform(-0.5, 0.5, size=(n_hidden, n_classes))
        self.b2 = rng.uniform(-0.5, 0.5, size=n_classes)
        velo = [np.zeros_like(p) for p in (self.W1, self.b1, self.W2, self.b2)]
        for _ in range(self.epochs):
            params = (self.W1, self.b1, self.W2, self.b2)
            _, grads = self.loss_and_grad(X, codes, params)
            new = []
            for p, g, v in zip(params, grads, velo):
                v *= self.momentum
                v -= self.lr * g
                new.append(p + v)
            self.W1, self.b1, self.W2, self.b2 = new
        return self

    def predict_scores(self, X):
        X = np.asarray(X, dtype=np.float64)
        _, P = self._forward(X, (self.W1, self.b1, self.W2, self.b2))
        return P

    def predict(self, X):
        scores = self.predict_scores(X)
        return [self.classes_[i] for i in scores.argmax(axis=1)]

    def to_state(self):
        return {
            "lr": self.lr,
            "momentum": self.momentum,
            "epochs": self.epochs,
            "classes": self.classes_,
            "W1": self.W1.tolist(),
            "b1": self.b1.tolist(),
            "W2": self.W2.tolist(),
            "b2": self.b2.tolist(),
        }

    @classmethod
    def from_state(cls, state):
        model = cls(
            lr=state["lr"], momentum=state["momentum"], epochs=state["epochs"]
        )
        model.classes_ = state["classes"]
        model.W1 = np.array(state["W1"], dtype=np.float64)
        model.b1 = np.array(state["b1"], dtype=np.float64)
        model.W2 = np.array(state["W2"], dtype=np.float64)
        model.b2 = np.array(state["b2"], dtype=np.float64)
        return model
