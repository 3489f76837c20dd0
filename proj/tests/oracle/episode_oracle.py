#!/usr/bin/env python3
# Copyright 2026 The SQPC Simulator Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Exact branch-enumeration oracle for single-position detection episodes.

Independent of the C++ simulator: every random choice and every measurement
outcome is enumerated with its exact probability, so the printed numbers are
the true per-unit detection probabilities (no sampling). The C++ tests freeze
these values; `--check` re-derives them and compares against the frozen table.
"""
import argparse
import itertools
import sys
from fractions import Fraction

import numpy as np

S = 1 / (2 * np.sqrt(2))
CHI = {0b0000: S, 0b0011: S, 0b1100: S, 0b0110: S, 0b1001: S, 0b1010: S,
       0b1111: -S, 0b0101: -S}
R2 = 1 / np.sqrt(2)
# Bell vectors over |00>,|01>,|10>,|11>
BELL = {"PHI+": np.array([R2, 0, 0, R2]), "PHI-": np.array([R2, 0, 0, -R2]),
        "PSI+": np.array([0, R2, R2, 0]), "PSI-": np.array([0, R2, -R2, 0])}
Z12_BELL34 = {(0, 0, "PHI+"), (1, 1, "PHI-"), (0, 1, "PSI-"), (1, 0, "PSI+")}
BELL12_Z34 = {("PHI+", 0, 0), ("PHI-", 1, 1), ("PSI-", 0, 1), ("PSI+", 1, 0)}


def chi_tensor(extra):
    psi = np.zeros([2] * (4 + extra), dtype=complex)
    for idx, a in CHI.items():
        bits = [(idx >> (3 - k)) & 1 for k in range(4)]
        psi[tuple(bits + [0] * extra)] = a
    return psi


def project_z(psi, q, v):
    out = psi.copy()
    sl = [slice(None)] * psi.ndim
    sl[q] = 1 - v
    out[tuple(sl)] = 0
    return out


def flip(psi, q):
    return np.flip(psi, axis=q).copy()


def norm2(psi):
    return float(np.sum(np.abs(psi) ** 2))


def measure_z(branches, q):
    """branches: list of (p, psi_normalized, rec). yields outcome per branch."""
    out = []
    for p, psi, rec in branches:
        for v in (0, 1):
            ph = project_z(psi, q, v)
            n = norm2(ph)
            if n > 1e-14:
                out.append((p * n, ph / np.sqrt(n), rec, v))
    return out


def set_z(psi, q, v):
    """psi already has qubit q in a definite Z value; force it to v."""
    cur = 0 if norm2(project_z(psi, q, 0)) > 0.5 else 1
    return psi if cur == v else flip(psi, q)


def prob_bell(psi, qa, qb, label):
    t = np.moveaxis(psi, (qa, qb), (0, 1)).reshape(4, -1)
    return float(np.sum(np.abs(BELL[label].conj() @ t) ** 2)), t


def prob_chi(psi, quad):
    t = np.moveaxis(psi, quad, (0, 1, 2, 3)).reshape(16, -1)
    v = np.zeros(16)
    for idx, a in CHI.items():
        v[idx] = a
    return float(np.sum(np.abs(v @ t) ** 2))


def tp_bell_then(psi, qa, qb):
    """Split psi by Bell outcome on (qa,qb); return [(p, label, post-state)]."""
    res = []
    for lab, vec in BELL.items():
        t = np.moveaxis(psi, (qa, qb), (0, 1))
        shp = t.shape
        t = t.reshape(4, -1)
        amp = vec.conj() @ t
        p = float(np.sum(np.abs(amp) ** 2))
        if p < 1e-14:
            continue
        proj = np.outer(vec, amp).reshape(shp)
        post = np.moveaxis(proj, (0, 1), (qa, qb)) / np.sqrt(p)
        res.append((p, lab, post))
    return res


def z_dist(psi, qs):
    """Joint Z distribution on qubits qs -> {tuple: prob}."""
    out = {}
    for vals in itertools.product((0, 1), repeat=len(qs)):
        ph = psi
        for q, v in zip(qs, vals):
            ph = project_z(ph, q, v)
        n = norm2(ph)
        if n > 1e-14:
            out[vals] = n
    return out


# ---------------------------------------------------------------- S1 phase

def s1_episode(attack, alice, bob, checked):
    """Returns exact detection probability for one S1 position.

    qubits: 0..3 chi, 4 = Eve's fake slot.
    attack: None | ('ir', v) | ('mr', leg) | ('cnot',)
    """
    extra = 1 if attack and attack[0] in ("ir", "cnot") else 0
    psi = chi_tensor(extra)
    # branch = (prob, psi, rec) with rec dict: flight, held, a, b
    branches = [(1.0, psi, {"flight": 0, "held": None})]

    def leg(branches, leg_no):
        out = []
        for p, psi, rec in branches:
            rec = dict(rec)
            if attack is None:
                out.append((p, psi, rec))
                continue
            kind = attack[0]
            if kind == "ir":
                v = attack[1]
                sub = (v in (1, 2) and leg_no == 1) or (v == 3 and leg_no == 2)
                back = (v == 1 and leg_no == 2) or (v in (2, 3) and leg_no == 3)
                if sub:
                    for fv in (0, 1):
                        r = dict(rec)
                        r["held"] = r["flight"]
                        r["flight"] = 4
                        out.append((p / 2, set_z(psi, 4, fv) if fv else psi, r))
                    continue
                if back:
                    rec["flight"], rec["held"] = rec["held"], None
                out.append((p, psi, rec))
            elif kind == "mr":
                if attack[1] == leg_no:
                    for pp, ph, r, _ in measure_z([(p, psi, rec)], rec["flight"]):
                        out.append((pp, ph, r))
                else:
                    out.append((p, psi, rec))
            elif kind == "cnot":
                if leg_no == 1:
                    # copy Z of flight into probe qubit 4
                    ph = psi.copy()
                    f = rec["flight"]
                    sl1 = [slice(None)] * psi.ndim
                    sl1[f] = 1
                    sub = ph[tuple(sl1)]
                    ax = 4 - (1 if f < 4 else 0)
                    ph[tuple(sl1)] = np.flip(sub, axis=ax)
                    out.append((p, ph, rec))
                else:
                    out.append((p, psi, rec))
        return out

    def party(branches, mode, key):
        if mode == "R":
            return branches
        out = []
        for p, psi, rec in branches:
            for pp, ph, r, v in measure_z([(p, psi, rec)], rec["flight"]):
                r = dict(r)
                r[key] = v
                out.append((pp, ph, r))
        return out

    b = leg(branches, 1)
    b = party(b, alice, "a")
    b = leg(b, 2)
    b = party(b, bob, "b")
    b = leg(b, 3)

    det = 0.0
    for p, psi, rec in b:
        ret = rec["flight"]
        if alice == "R" and bob == "R":
            det += p * (1 - prob_chi(psi, (ret, 1, 2, 3)))
            continue
        if alice == "R" and bob == "M" and not checked:
            continue
        if alice == "M" and bob == "R" and not checked:
            continue
        for pb, lab, post in tp_bell_then(psi, 2, 3):
            for vals, pz in z_dist(post, (1, ret)).items():
                z2, tz = vals
                q = p * pb * pz
                if alice == "M" and bob == "M":
                    ok = (rec["a"], z2, lab) in Z12_BELL34 and rec["a"] == rec["b"] == tz
                elif bob == "M":
                    ok = tz == rec["b"] and (rec["b"], z2, lab) in Z12_BELL34
                else:
                    ok = tz == rec["a"] and (rec["a"], z2, lab) in Z12_BELL34
                if not ok:
                    det += q
    return det


def s1_rate(attack):
    tot = 0.0
    per_case = {}
    for alice, bob, chk in itertools.product("RM", "RM", (True, False)):
        d = s1_episode(attack, alice, bob, chk) / 8
        tot += d
        per_case[alice + bob] = per_case.get(alice + bob, 0) + d * 4
    return tot, per_case


# ---------------------------------------------------------------- S3 phase

def s3_episode(attack, alice, prep, bob, ma, mb):
    """qubits 0..3 chi, 4,5 fake pair slots. ma/mb: 2-bit tuples."""
    extra = 2 if attack and attack[0] == "ir" else 0
    psi = chi_tensor(extra)
    branches = [(1.0, psi, {"flight": (2, 3), "held": None})]

    def leg(branches, leg_no):
        out = []
        for p, psi, rec in branches:
            rec = dict(rec)
            if attack is None:
                out.append((p, psi, rec))
                continue
            if attack[0] == "ir":
                v = attack[1]
                sub = (v in (1, 2) and leg_no == 1) or (v == 3 and leg_no == 2)
                back = (v == 1 and leg_no == 2) or (v in (2, 3) and leg_no == 3)
                if sub:
                    for f in itertools.product((0, 1), repeat=2):
                        r = dict(rec)
                        r["held"] = r["flight"]
                        r["flight"] = (4, 5)
                        ph = psi
                        if f[0]:
                            ph = flip(ph, 4)
                        if f[1]:
                            ph = flip(ph, 5)
                        out.append((p / 4, ph, r))
                    continue
                if back:
                    rec["flight"], rec["held"] = rec["held"], None
                out.append((p, psi, rec))
            elif attack[0] == "mr":
                if attack[1] == leg_no:
                    bs = [(p, psi, rec)]
                    for q in rec["flight"]:
                        bs = [(pp, ph, r) for pp, ph, r, _ in measure_z(bs, q)]
                    out.extend(bs)
                else:
                    out.append((p, psi, rec))
        return out

    def party(branches, mode, key, fresh):
        if mode == "R":
            return branches
        out = []
        for p, psi, rec in branches:
            bs = [(p, psi, dict(rec, **{key: ()}))]
            for q in rec["flight"]:
                nb = []
                for pp, ph, r, v in measure_z(bs, q):
                    nb.append((pp, ph, dict(r, **{key: r[key] + (v,)})))
                bs = nb
            for pp, ph, r in bs:
                vals = fresh(r[key])
                for q, v in zip(r["flight"], vals):
                    ph = set_z(ph, q, v)
                out.append((pp, ph, r))
        return out

    b = leg(branches, 1)
    b = party(b, alice, "a", (lambda found: found) if prep == "F" else (lambda found: ma))
    b = leg(b, 2)
    b = party(b, bob, "b", lambda found: mb)
    b = leg(b, 3)

    det = 0.0
    for p, psi, rec in b:
        ret = rec["flight"]
        if alice == "R" and bob == "R":
            det += p * (1 - prob_chi(psi, (0, 1) + ret))
            continue
        for pb, lab, post in tp_bell_then(psi, 0, 1):
            for tz, pz in z_dist(post, ret).items():
                q = p * pb * pz
                if alice == "R":  # case 2
                    ok = (lab,) + rec["b"] in BELL12_Z34 and tz == mb
                elif bob == "R":  # case 3
                    ok = (lab,) + rec["a"] in BELL12_Z34
                else:  # case 4
                    ok = (lab,) + rec["a"] in BELL12_Z34 and tz == mb
                    if prep == "F":
                        ok = ok and rec["a"] == rec["b"]
                if not ok:
                    det += q
    return det


def s3_rate(attack):
    tot = 0.0
    per_case = {}
    bits = list(itertools.product((0, 1), repeat=2))
    for alice, bob, prep in itertools.product("RM", "RM", "FK"):
        acc = 0.0
        for ma in bits:
            for mb in bits:
                acc += s3_episode(attack, alice, prep, bob, ma, mb) / 16
        d = acc / 8
        tot += d
        per_case[alice + bob] = per_case.get(alice + bob, 0) + d * 4
    return tot, per_case


def table():
    rows = {}
    for v in (1, 2, 3):
        rows[f"ir{v}-s1"] = s1_rate(("ir", v))
        rows[f"ir{v}-s3"] = s3_rate(("ir", v))
    for leg_no in (1, 2, 3):
        rows[f"mr{leg_no}-s1"] = s1_rate(("mr", leg_no))
        rows[f"mr{leg_no}-s3"] = s3_rate(("mr", leg_no))
    rows["cnot-s1"] = s1_rate(("cnot",))
    rows["none-s1"] = s1_rate(None)
    rows["none-s3"] = s3_rate(None)
    return rows


# Frozen values consumed by tests/test_oracle_values.cpp.
FROZEN = {
    "ir1-s1": Fraction(3, 16), "ir2-s1": Fraction(1, 4), "ir3-s1": Fraction(3, 16),
    "ir1-s3": Fraction(3, 8), "ir2-s3": Fraction(21, 32), "ir3-s3": Fraction(57, 128),
    "mr1-s1": Fraction(1, 8), "mr2-s1": Fraction(1, 8), "mr3-s1": Fraction(1, 8),
    "mr1-s3": Fraction(3, 16), "mr2-s3": Fraction(3, 16), "mr3-s3": Fraction(3, 16),
    "cnot-s1": Fraction(1, 8), "none-s1": Fraction(0), "none-s3": Fraction(0),
}


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--check", action="store_true")
    args = ap.parse_args()
    rows = table()
    bad = 0
    for k, (tot, per_case) in rows.items():
        frac = Fraction(tot).limit_denominator(4096)
        cases = " ".join(f"{c}={Fraction(v).limit_denominator(4096)}" for c, v in per_case.items())
        flag = ""
        if args.check:
            if abs(tot - float(FROZEN[k])) > 1e-9:
                flag = f"  MISMATCH (frozen {FROZEN[k]})"
                bad += 1
        print(f"{k:8s} {tot:.10f} = {frac}   [{cases}]{flag}")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
