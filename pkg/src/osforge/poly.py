"""Integer polynomials as coefficient lists (index = power of t)."""
from __future__ import annotations


def trim(p) -> list:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def mul(a, b) -> list:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return trim(out)


def evaluate(p, t):
    acc = 0
    for c in reversed(p):
        acc = acc * t + c
    return acc


def divide_one_plus_t(p) -> tuple[list, int]:
    """Quotient and remainder of ``p`` by ``1 + t`` (synthetic division at -1)."""
    p = trim(p)
    if not p:
        return [], 0
    q = [0] * (len(p) - 1)
    acc = p[-1]
    for k in range(len(p) - 2, -1, -1):
        q[k] = acc
        acc = p[k] - acc
    return trim(q), acc


def one_plus_t_power(s: int) -> list:
    out = [1]
    for _ in range(s):
        out = mul(out, [1, 1])
    return out


def render(p, var: str = "t") -> str:
    p = trim(p)
    if not p:
        return "0"
    parts = []
    for k, c in enumerate(p):
        if not c:
            continue
        mag = abs(c)
        mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
        body = str(mag) if not mono else (mono if mag == 1 else f"{mag}*{mono}")
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts)
