from cubepaths.cube import num_edges


def odd_part(k: int) -> int:
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    return k >> ((k & -k).bit_length() - 1)


def infeasibility_reason(n: int, k: int, even: bool = False):
    """Name the first necessary condition that ``(n, k)`` violates, or ``None``.

    Odd ``n`` uses the proven criterion ``k | n 2^(n-1)`` and ``k <= n``; ``even=True`` uses the
    conjectured even-``n`` criterion ``k | n 2^(n-1)`` and ``k < 2^n``.
    """
    if n < 1:
        return "n ≥ 1 violated"
    if k < 1:
        return "k ≥ 1 violated"
    if even and n % 2:
        return "n must be even"
    if not even and n % 2 == 0:
        return "n must be odd"
    if num_edges(n) % k:
        return "k | n·2^(n−1) violated"
    if not even and k > n:
        return "k ≤ n violated"
    if even and k >= 1 << n:
        return "k < 2^n violated"
    return None


def feasible(n: int, k: int) -> bool:
    """Odd ``n``: ``Q_n`` decomposes into paths of length ``k`` iff this holds."""
    if n % 2 == 0:
        raise ValueError("n is even; use feasible_even")
    return infeasibility_reason(n, k) is None


def feasible_even(n: int, k: int) -> bool:
    """Conjectured criterion for even ``n``; a True answer is not a guarantee."""
    if n % 2:
        raise ValueError("n is odd; use feasible")
    return infeasibility_reason(n, k, even=True) is None
