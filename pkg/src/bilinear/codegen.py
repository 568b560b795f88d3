"""
Straight-line XOR/AND programs for bilinear algorithms.

Program text, one statement per line:
    t3 = x0 ^ x1
    m0 = t3 & t4
    z0 = m0
Lines starting with '#' are comments.
"""

import re
from typing import Dict, List, Tuple, Union

import numpy as np

from bilinear.algorithm import BilinearAlgorithm

Value = Union[int, np.ndarray]

_STATEMENT = re.compile(r'^(\w+) = (\w+)(?: ([&^]) (\w+))?$')


class _Emitter:
    def __init__(self, n: int):
        self.n = n
        self.lines: List[str] = []
        self.temps = 0
        self.cache: Dict[Tuple[str, int], str] = {}

    def temp(self) -> str:
        name = f"t{self.temps}"
        self.temps += 1
        return name

    def xor_chain(self, names: List[str], target: str = "") -> str:
        """XOR names together with binary statements; the last one is written to target if given"""
        if not names:
            name = target or self.temp()
            self.lines.append(f"{name} = 0")
            return name
        if len(names) == 1:
            if target:
                self.lines.append(f"{target} = {names[0]}")
                return target
            return names[0]
        acc = names[0]
        for k, name in enumerate(names[1:], start=2):
            out = target if (target and k == len(names)) else self.temp()
            self.lines.append(f"{out} = {acc} ^ {name}")
            acc = out
        return acc

    def form(self, variable: str, mask: int) -> str:
        key = (variable, mask)
        if key not in self.cache:
            names = [f"{variable}{i}" for i in range(self.n) if (mask >> i) & 1]
            self.cache[key] = self.xor_chain(names)
        return self.cache[key]


def codegen(alg: BilinearAlgorithm) -> str:
    """Emit a deterministic program with exactly alg.rank AND statements"""
    em = _Emitter(alg.n)
    em.lines.append(f"# F_2^{alg.n} modulus {alg.field.modulus.to_hex()} rank {alg.rank}")
    for l, (a, b) in enumerate(zip(alg.a_forms, alg.b_forms)):
        left = em.form("x", a)
        right = em.form("y", b)
        em.lines.append(f"m{l} = {left} & {right}")
    for i in range(alg.n):
        terms = [f"m{l}" for l, c in enumerate(alg.c_vecs) if (c >> i) & 1]
        em.xor_chain(terms, target=f"z{i}")
    return "\n".join(em.lines) + "\n"


def interpret(program: str, x: Value, y: Value, n: int) -> Value:
    """
    Run a program on packed inputs.

    x and y may be ints or integer numpy arrays (evaluated elementwise).
    """
    env: Dict[str, Value] = {}
    for i in range(n):
        env[f"x{i}"] = (x >> i) & 1
        env[f"y{i}"] = (y >> i) & 1
    for line in program.splitlines():
        line = line.strip()
        if not line or line.startswith('#'):
            continue
        match = _STATEMENT.match(line)
        if not match:
            raise ValueError(f"Malformed statement: {line!r}")
        target, left, op, right = match.groups()
        lhs = 0 if left == '0' else env[left]
        if op is None:
            env[target] = lhs
        elif op == '^':
            env[target] = lhs ^ env[right]
        else:
            env[target] = lhs & env[right]
    z: Value = 0
    for i in range(n):
        z = z | (env[f"z{i}"] << i)
    return z


def program_stats(program: str) -> Dict[str, int]:
    """Counts of AND and XOR statements"""
    stats = {"and": 0, "xor": 0, "copy": 0}
    for line in program.splitlines():
        if not line.strip() or line.startswith('#'):
            continue
        if ' & ' in line:
            stats["and"] += 1
        elif ' ^ ' in line:
            stats["xor"] += 1
        else:
            stats["copy"] += 1
    return stats
