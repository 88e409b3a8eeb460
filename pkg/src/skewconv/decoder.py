"""Trellis-based decoding over the q-ary symmetric channel.

viterbi() returns the maximum-likelihood information sequence under Hamming
metric (ML for the q-ary symmetric channel when eps < (Q-1)/Q); bcjr() runs
the exact forward-backward recursion and returns per-time posteriors of the
information blocks.  Both walk the trellis phase-aware: time t uses section
t mod num_sections, so periodic time-varying codes decode correctly.
"""

import math
from dataclasses import dataclass, field as dc_field

import numpy as np

from .code import Sequence

__all__ = ["QSChannel", "DecodeResult", "viterbi", "bcjr"]


class QSChannel:
    """q-ary symmetric channel: a symbol survives with probability 1 - eps or
    is replaced by one of the other q - 1 symbols uniformly."""

    def __init__(self, q, eps):
        if q < 2:
            raise ValueError("channel alphabet needs q >= 2")
        if not 0.0 <= eps < 1.0:
            raise ValueError(f"eps={eps} outside [0, 1)")
        self.q = q
        self.eps = float(eps)

    def transition_prob(self, sent, received):
        if sent == received:
            return 1.0 - self.eps
        return self.eps / (self.q - 1)

    def block_likelihood(self, sent_block, received_block):
        mismatches = sum(1 for a, b in zip(sent_block, received_block) if a != b)
        hits = len(sent_block) - mismatches
        return (1.0 - self.eps) ** hits * (self.eps / (self.q - 1)) ** mismatches

    def transmit_symbol(self, symbol, rng):
        if rng.random() >= self.eps:
            return symbol
        other = rng.randrange(self.q - 1)
        return other if other < symbol else other + 1

    def transmit(self, seq, rng):
        out = [[self.transmit_symbol(c.value, rng) for c in block] for block in seq]
        return Sequence(seq.field, out, width=seq.width)


@dataclass
class DecodeResult:
    info_est: Sequence
    metric: int | None
    posteriors: list | None = dc_field(default=None)


def _coerce_received(trellis, received):
    if isinstance(received, Sequence):
        if received.width not in (None, trellis.n):
            raise ValueError(f"received blocks have length {received.width}, expected {trellis.n}")
        return received.to_ints()
    return Sequence(trellis.field, received, width=trellis.n).to_ints()


def viterbi(trellis, received, terminated=False):
    """ML sequence decoding by minimum Hamming distance.

    Ties break toward the lowest predecessor state, then the lowest input
    index, so the traceback is deterministic.  With terminated=True the last
    `memory` steps admit only zero inputs and the tail is dropped from the
    returned estimate.
    """
    blocks = _coerce_received(trellis, received)
    total = len(blocks)
    tail = trellis.memory if terminated else 0
    if total <= tail and terminated:
        raise ValueError(f"received length {total} too short for a terminated frame")

    num_states = trellis.num_states
    metrics = [math.inf] * num_states
    metrics[0] = 0
    parents = []
    for t, rblock in enumerate(blocks):
        section = trellis.sections[t % trellis.num_sections]
        inputs = 1 if t >= total - tail else trellis.num_inputs
        nmetrics = [math.inf] * num_states
        npar = [None] * num_states
        for st in range(num_states):
            mv = metrics[st]
            if mv == math.inf:
                continue
            edges = section[st]
            for idx in range(inputs):
                e = edges[idx]
                d = mv + sum(1 for a, b in zip(e.label, rblock) if a != b)
                if d < nmetrics[e.to_state]:
                    nmetrics[e.to_state] = d
                    npar[e.to_state] = (st, idx)
        parents.append(npar)
        metrics = nmetrics

    if terminated:
        end_state = 0
        if metrics[0] == math.inf:
            raise ValueError("no terminated path reaches the zero state")
    else:
        end_state = min(range(num_states), key=lambda st: (metrics[st], st))
    metric = metrics[end_state]

    state = end_state
    inputs_rev = []
    for t in range(total - 1, -1, -1):
        st, idx = parents[t][state]
        inputs_rev.append(trellis.input_block(idx))
        state = st
    inputs_rev.reverse()
    info = inputs_rev[: total - tail]
    return DecodeResult(Sequence(trellis.field, info, width=trellis.k), int(metric))


def bcjr(trellis, received, channel, terminated=False):
    """Exact symbol-wise APP decoding by the forward-backward recursion.

    Probability domain with per-step renormalization; posteriors[t] is the
    distribution over the q^k input-block indices at time t (uniform prior).
    Hard decisions are the per-time argmax.
    """
    q = trellis.q
    if channel.q != q:
        raise ValueError("channel alphabet does not match the trellis field")
    max_eps = (q - 1) / q
    if not 0.0 < channel.eps < max_eps:
        raise ValueError(f"eps must lie in (0, {max_eps}) for APP decoding")

    blocks = _coerce_received(trellis, received)
    total = len(blocks)
    tail = trellis.memory if terminated else 0
    if total <= tail and terminated:
        raise ValueError(f"received length {total} too short for a terminated frame")

    num_states = trellis.num_states
    num_inputs = trellis.num_inputs

    # gammas[t][st][idx] = P(input idx) * P(received_t | label)
    gammas = []
    for t, rblock in enumerate(blocks):
        section = trellis.sections[t % trellis.num_sections]
        inputs = 1 if t >= total - tail else num_inputs
        prior = 1.0 if inputs == 1 else 1.0 / num_inputs
        g = np.zeros((num_states, num_inputs))
        for st in range(num_states):
            edges = section[st]
            for idx in range(inputs):
                g[st, idx] = prior * channel.block_likelihood(edges[idx].label, rblock)
        gammas.append(g)

    alpha = np.zeros((total + 1, num_states))
    alpha[0, 0] = 1.0
    for t in range(total):
        section = trellis.sections[t % trellis.num_sections]
        g = gammas[t]
        for st in range(num_states):
            av = alpha[t, st]
            if av == 0.0:
                continue
            edges = section[st]
            for idx in range(num_inputs):
                w = g[st, idx]
                if w:
                    alpha[t + 1, edges[idx].to_state] += av * w
        norm = alpha[t + 1].sum()
        if norm == 0.0:
            raise ValueError(f"received block {t} has zero likelihood under the trellis")
        alpha[t + 1] /= norm

    beta = np.zeros((total + 1, num_states))
    if terminated:
        beta[total, 0] = 1.0
    else:
        beta[total, :] = 1.0 / num_states
    for t in range(total - 1, -1, -1):
        section = trellis.sections[t % trellis.num_sections]
        g = gammas[t]
        for st in range(num_states):
            edges = section[st]
            acc = 0.0
            for idx in range(num_inputs):
                w = g[st, idx]
                if w:
                    acc += w * beta[t + 1, edges[idx].to_state]
            beta[t, st] = acc
        norm = beta[t].sum()
        if norm == 0.0:
            raise ValueError(f"received block {t} has zero likelihood under the trellis")
        beta[t] /= norm

    info_len = total - tail
    posteriors = []
    hard = []
    for t in range(info_len):
        section = trellis.sections[t % trellis.num_sections]
        g = gammas[t]
        post = np.zeros(num_inputs)
        for st in range(num_states):
            av = alpha[t, st]
            if av == 0.0:
                continue
            edges = section[st]
            for idx in range(num_inputs):
                w = g[st, idx]
                if w:
                    post[idx] += av * w * beta[t + 1, edges[idx].to_state]
        post /= post.sum()
        posteriors.append(post)
        hard.append(trellis.input_block(int(post.argmax())))

    return DecodeResult(
        Sequence(trellis.field, hard, width=trellis.k), None, posteriors
    )
