"""Feature scoring: one-way ANOVA with omega-squared effect sizes, and
three alternative selectors (correlation-based subsets, ReliefF, linear
SVM weights).

The F-distribution tail probability is computed here from the regularized
incomplete beta function (continued-fraction form) rather than pulled
from a statistics library, so the whole scoring path has no dependency
beyond numpy.
"""

import math

import numpy as np

BAND_WEAK = 0.06
BAND_MODERATE = 0.14

_BETA_EPS = 3e-16
_BETA_FPMIN = 1e-300
_BETA_MAXIT = 300


def _betacf(a, b, x):
    # Lentz's continued fraction for the incomplete beta function
    qab = a + b
    qap = a + 1.0
    qam = a - 1.0
    c = 1.0
    d = 1.0 - qab * x / qap
    if abs(d) < _BETA_FPMIN:
        d = _BETA_FPMIN
    d = 1.0 / d
    h = d
    for m in range(1, _BETA_MAXIT + 1):
        m2 = 2 * m
        aa = m * (b - m) * x / ((qam + m2) * (a + m2))
        d = 1.0 + aa * d
        if abs(d) < _BETA_FPMIN:
            d = _BETA_FPMIN
        c = 1.0 + aa / c
        if abs(c) < _BETA_FPMIN:
            c = _BETA_FPMIN
        d = 1.0 / d
        h *= d * c
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2))
        d = 1.0 + aa * d
        if abs(d) < _BETA_FPMIN:
            d = _BETA_FPMIN
        c = 1.0 + aa / c
        if abs(c) < _BETA_FPMIN:
            c = _BETA_FPMIN
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < _BETA_EPS:
            break
    return h


def betainc_reg(a, b, x):
    """Regularized incomplete beta I_x(a, b)."""
    if x <= 0.0:
        return 0.0
    if x >= 1.0:
        return 1.0
    ln_bt = (
        math.lgamma(a + b)
        - math.lgamma(a)
        - math.lgamma(b)
        + a * math.log(x)
        + b * math.log(1.0 - x)
    )
    bt = math.exp(ln_bt)
    if x < (a + 1.0) / (a + b + 2.0):
        return bt * _betacf(a, b, x) / a
    return 1.0 - bt * _betacf(b, a, 1.0 - x) / b


def f_sf(f_value, df_num, df_den):
    """Upper tail P(F > f) of the F distribution."""
    if math.isinf(f_value):
        return 0.0
    if f_value <= 0.0:
        return 1.0
    x = df_den / (df_den + df_num * f_value)
    return betainc_reg(df_den / 2.0, df_num / 2.0, x)


def effect_band(omega_sq):
    """weak / moderate / strong label on the clamped effect size."""
    clamped = max(omega_sq, 0.0)
    if clamped < BAND_WEAK:
        return "weak"
    if clamped < BAND_MODERATE:
        return "moderate"
    return "strong"


def one_way_anova(groups):
    """F test plus omega-squared for 2+ groups of observations.

    Returns a dict with ss_between, ss_within, f, p, omega_sq, band, and
    an `infinite` flag set when the within-group variance vanishes while
    group means differ.
    """
    groups = [np.asarray(g, dtype=np.float64) for g in groups]
    if len(groups) < 2:
        raise ValueError("need at least two groups")
    if any(len(g) == 0 for g in groups):
        raise ValueError("empty group")
    n = sum(len(g) for g in groups)
    k = len(groups)
    if n <= k:
        raise ValueError("need more observations than groups")
    grand = sum(float(g.sum()) for g in groups) / n
    ssb = sum(len(g) * (float(g.mean()) - grand) ** 2 for g in groups)
    ssw = sum(float(((g - g.mean()) ** 2).sum()) for g in groups)
    sst = ssb + ssw
    df_b = k - 1
    df_w = n - k
    msb = ssb / df_b
    msw = ssw / df_w
    infinite = False
    if msw == 0.0:
        if msb == 0.0:
            f_value = 0.0
            omega = 0.0
        else:
            f_value = math.inf
            infinite = True
            omega = ssb / sst if sst > 0 else 0.0
    else:
        f_value = msb / msw
        omega = (ssb - df_b * msw) / (sst + msw)
    return {
        "f": f_value,
        "p": f_sf(f_value, df_b, df_w),
        "omega_sq": omega,
        "band": effect_band(omega),
        "ss_between": ssb,
        "ss_within": ssw,
        "df_between": df_b,
        "df_within": df_w,
        "infinite": infinite,
    }


def pearson(x, y):
    """Pearson correlation; 0.0 when either side has no variance."""
    x = np.asarray(x, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    if x.shape != y.shape:
        raise ValueError("length mismatch")
    if x.size < 2:
        return 0.0
    xd = x - x.mean()
    yd = y - y.mean()
    sx = float(np.sqrt((xd * xd).sum()))
    sy = float(np.sqrt((yd * yd).sum()))
    if sx == 0.0 or sy == 0.0:
        return 0.0
    return float((xd * yd).sum() / (sx * sy))


def rank_omega(matrix, labels, feature_names):
    """Per-feature ANOVA across label groups, sorted by raw omega-squared
    descending with the feature name breaking ties."""
    matrix = np.asarray(matrix, dtype=np.float64)
    labels = np.asarray(labels)
    classes = sorted(set(labels.tolist()))
    rows = []
    for j, name in enumerate(feature_names):
        groups = [matrix[labels == c, j] for c in classes]
        res = one_way_anova(groups)
        rows.append(
            {
                "feature": name,
                "f": res["f"],
                "p": res["p"],
                "omega_sq": res["omega_sq"],
                "band": res["band"],
                "infinite": res["infinite"],
            }
        )
    rows.sort(key=lambda r: (-r["omega_sq"], r["feature"]))
    return rows


def _class_codes(labels):
    classes = sorted(set(labels))
    code = {c: i + 1 for i, c in enumerate(classes)}
    return np.array([code[c] for c in labels], dtype=np.float64)


def cfs_merit(k, mean_cf, mean_ff):
    denom = math.sqrt(k + k * (k - 1) * mean_ff)
    if denom == 0.0:
        return 0.0
    return k * mean_cf / denom


def select_cfs(matrix, labels, feature_names):
    """Greedy forward correlation-based subset selection.

    Adds the feature with the best resulting merit until merit stops
    strictly improving. Returns [(name, merit_when_added)] in order.
    """
    matrix = np.asarray(matrix, dtype=np.float64)
    y = _class_codes(labels)
    n_feat = matrix.shape[1]
    r_cf = np.array([abs(pearson(matrix[:, j], y)) for j in range(n_feat)])
    r_ff = {}

    def feat_corr(a, b):
        key = (a, b) if a < b else (b, a)
        if key not in r_ff:
            r_ff[key] = abs(pearson(matrix[:, key[0]], matrix[:, key[1]]))
        return r_ff[key]

    selected = []
    best_merit = 0.0
    remaining = list(range(n_feat))
    while remaining:
        best_j = None
        best_j_merit = None
        for j in remaining:
            subset = selected + [j]
            k = len(subset)
            mean_cf = float(np.mean([r_cf[i] for i in subset]))
            if k == 1:
                mean_ff = 0.0
            else:
                pairs = [
                    feat_corr(a, b)
                    for idx, a in enumerate(subset)
                    for b in subset[idx + 1 :]
                ]
                mean_ff = float(np.mean(pairs))
            merit = cfs_merit(k, mean_cf, mean_ff)
            if best_j_merit is None or merit > best_j_merit or (
                merit == best_j_merit and feature_names[j] < feature_names[best_j]
            ):
                best_j = j
                best_j_merit = merit
        if best_j is None or best_j_merit <= best_merit:
            break
        selected.append(best_j)
        remaining.remove(best_j)
        best_merit = best_j_merit
    # merit at the time each feature joined
    out = []
    for idx, j in enumerate(selected):
        subset = selected[: idx + 1]
        k = len(subset)
        mean_cf = float(np.mean([r_cf[i] for i in subset]))
        if k == 1:
            mean_ff = 0.0
        else:
            pairs = [
                feat_corr(a, b)
                for i2, a in enumerate(subset)
                for b in subset[i2 + 1 :]
            ]
            mean_ff = float(np.mean(pairs))
        out.append((feature_names[j], cfs_merit(k, mean_cf, mean_ff)))
    return out


def _minmax_normalize(matrix):
    lo = matrix.min(axis=0)
    hi = matrix.max(axis=0)
    span = hi - lo
    span[span == 0.0] = 1.0
    return (matrix - lo) / span


def rank_relieff(matrix, labels, feature_names, n_neighbors=10, seed=0,
                 sample_size=None):
    """ReliefF weights over min-max normalized features.

    Every instance is evaluated by default (sample_size limits that, with
    a seeded choice). Misses from each other class are weighted by the
    class prior renormalized over the complement of the instance's class.
    Neighbor ties break on the lower row index.
    """
    X = _minmax_normalize(np.asarray(matrix, dtype=np.float64))
    y = np.asarray(labels)
    n, n_feat = X.shape
    classes = sorted(set(y.tolist()))
    counts = {c: int((y == c).sum()) for c in classes}
    priors = {c: counts[c] / n for c in classes}

    if sample_size is not None and sample_size < n:
        rng = np.random.default_rng(seed)
        chosen = np.sort(rng.choice(n, size=sample_size, replace=False))
    else:
        chosen = np.arange(n)
    m = len(chosen)

    weights = np.zeros(n_feat, dtype=np.float64)
    for i in chosen:
        dists = np.abs(X - X[i]).sum(axis=1)
        order = np.lexsort((np.arange(n), dists))
        same = []
        by_class = {c: [] for c in classes if c != y[i]}
        k_hit = min(n_neighbors, counts[y[i]] - 1)
        for j in order:
            if j == i:
                continue
            if y[j] == y[i]:
                if len(same) < k_hit:
                    same.append(j)
            else:
                bucket = by_class[y[j]]
                if len(bucket) < min(n_neighbors, counts[y[j]]):
                    bucket.append(j)
        if same:
            hit_diff = np.zeros(n_feat)
            for j in same:
                hit_diff += np.abs(X[i] - X[j])
            weights -= hit_diff / (len(same) * m)
        denom = 1.0 - priors[y[i]]
        if denom > 0.0:
            for c, bucket in by_class.items():
                if not bucket:
                    continue
                miss_diff = np.zeros(n_feat)
                for j in bucket:
                    miss_diff += np.abs(X[i] - X[j])
                weights += (priors[c] / denom) * miss_diff / (len(bucket) * m)
    ranked = sorted(
        zip(feature_names, weights.tolist()), key=lambda kv: (-kv[1], kv[0])
    )
    return ranked


def rank_svm_weights(matrix, labels, feature_names, seed=0, epochs=200,
                     lam=0.01):
    """Feature scores from one-vs-rest linear SVMs.

    Full-batch subgradient descent on the L2-regularized hinge loss with
    a 1/(lam*t) step size; the score of a feature is the sum of |weight|
    across the per-class models. Features are standardized internally.
    """
    X = np.asarray(matrix, dtype=np.float64)
    mu = X.mean(axis=0)
    sd = X.std(axis=0)
    sd[sd == 0.0] = 1.0
    X = (X - mu) / sd
    y = np.asarray(labels)
    n, n_feat = X.shape
    classes = sorted(set(y.tolist()))
    scores = np.zeros(n_feat, dtype=np.float64)
    for c in classes:
        target = np.where(y == c, 1.0, -1.0)
        w = np.zeros(n_feat, dtype=np.float64)
        b = 0.0
        for t in range(1, epochs + 1):
            margins = target * (X @ w + b)
            viol = margins < 1.0
            step = 1.0 / (lam * t)
            grad_w = lam * w - (target[viol, None] * X[viol]).sum(axis=0) / n
            grad_b = -target[viol].sum() / n
            w = w - step * grad_w
            b = b - step * grad_b
        scores += np.abs(w)
    ranked = sorted(
        zip(feature_names, scores.tolist()), key=lambda kv: (-kv[1], kv[0])
    )
    return ranked
