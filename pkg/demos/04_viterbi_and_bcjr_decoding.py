"""Hard-decision Viterbi and exact APP (BCJR) decoding on the period-2 trellis."""

import random

from skewconv import (
    FiniteField,
    QSChannel,
    SkewConvCode,
    SkewPolyMatrix,
    bcjr,
    viterbi,
)
from skewconv.trellis import build_trellis

A = 2
field = FiniteField(2, 2, modulus=[1, 1, 1], theta_r=1)
code = SkewConvCode(SkewPolyMatrix.from_ints(field, [[[1, A], [A, A + 1]]]))
trellis = build_trellis(code)
rng = random.Random(4)

u = [[rng.randrange(4)] for _ in range(6)]
sent = code.encode(u, terminate=True)
print(f"info     : {[b[0] for b in u]}")
print(f"sent     : {sent.to_ints()}")

channel = QSChannel(4, eps=0.08)
received = channel.transmit(sent, rng)
flips = sum(1 for a, b in zip(sent.flat_values(), received.flat_values()) if a != b)
print(f"received : {received.to_ints()}   ({flips} symbol errors)")

hard = viterbi(trellis, received, terminated=True)
print(f"viterbi  : {[b[0].value for b in hard.info_est]}   metric {hard.metric}")

soft = bcjr(trellis, received, channel, terminated=True)
print(f"bcjr     : {[b[0].value for b in soft.info_est]}")
print("posterior of each info symbol value per time step:")
for t, post in enumerate(soft.posteriors):
    rendered = ", ".join(f"{field.element_name(c)}:{post[c]:.3f}" for c in range(4))
    print(f"  t={t}: {rendered}")
