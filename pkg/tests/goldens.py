"""Hand-entered logical forms, in the term reader syntax.

Keys name the sentence or intermediate step.  Complements bind D' and
close the existential restriction before the implication.
"""
from comparatives.termio import read_term

FAST_CAR = read_term("lam y:e . lam d:d . fast' car' y d")

TEXT = {
    "gap": "lam Q:<e,t> . exists y:e . P0 y d:d & Q y",
    "degree_op": "lam D:<d,t> . lam D':<d,t> . forall d:d . D d -> D' d",
    "gap_bound": "exists y:e . P0 y d:d & own' b* y",
    "complement_open": "lam D':<d,t> . forall d:d . (exists y:e . P0 y d & own' b* y) -> D' d",
    "wh_attr": "lam Q:<e,t> . lam D':<d,t> . forall d:d . (exists y:e . P0 y d & Q y) -> D' d",
    "complement": "lam D':<d,t> . forall d:d . (exists y:e . fast' car' y d & own' b* y) -> D' d",
    "complement_any": "lam D':<d,t> . forall d:d . (exists y:e . P0 y d & (exists x:e . policeman' x & has' x y)) -> D' d",
    "complement_every_narrow": "lam D':<d,t> . forall d:d . (exists y:e . P0 y d & (forall x:e . policeman' x -> has' x y)) -> D' d",
    "complement_has_x": "lam D':<d,t> . forall d:d . (exists y:e . P0 y d & has' x:e y) -> D' d",
    "every_policeman": "lam G:<e,t> . forall x:e . policeman' x -> G x",
    "complement_every_wide": "lam D':<d,t> . forall x:e . policeman' x -> (forall d:d . (exists y:e . P0 y d & has' x y) -> D' d)",
    "fast_attr": "lam d:d . lam Q:<e,t> . lam x:e . fast' Q x d",
    "er": "lam D:<d,t> . lam P:<<d,t>,t> . exists d':d . P (lam d:d . d' > d) & D d'",
    "er_fast": "lam Q:<e,t> . lam x:e . lam P:<<d,t>,t> . exists d':d . P (lam d:d . d' > d) & fast' Q x d'",
    "faster_car": "lam x:e . lam P:<<d,t>,t> . exists d':d . P (lam d:d . d' > d) & fast' car' x d'",
    "a_faster_car": "lam P:<<d,t>,t> . lam Q:<e,t> . exists x:e . exists d':d . P (lam d:d . d' > d) & fast' car' x d' & Q x",
    "faster_car_than_bill": "lam Q:<e,t> . exists x:e . exists d':d . (forall d:d . (exists y:e . P0 y d & own' b* y) -> d' > d)"
          " & fast' car' x d' & Q x",
    "standard": "exists x:e . exists d':d . (forall d:d . (exists y:e . fast' car' y d & own' b* y) -> d' > d)"
          " & fast' car' x d' & own' g* x",
    "at_least_two": "atleast 2 x:e . exists d':d . (forall d:d . (exists y:e . fast' car' y d & own' b* y) -> d' > d)"
          " & fast' car' x d' & own' g* x",
    "wh_direct": "lam P:<<e,t>,t> . lam D:<d,t> . forall d:d . P (lam x:e . P0 x d) -> D d",
    "complement_bmw": "lam D:<d,t> . forall d:d . P0 bmw* d -> D d",
    "than_bmw": "exists x:e . exists d':d . (forall d:d . fast' car' bmw* d -> d' > d) & fast' car' x d' & own' g* x",
    "complement_rich": "lam D:<d,t> . forall d:d . rich' b* d -> D d",
    # George is richer than Bill
    "richer": "exists d':d . (forall d:d . rich' b* d -> d' > d) & rich' g* d'",
    # than any policeman: WH wide, P0 resolved
    "than_any": "exists x:e . exists d':d . (forall d:d . (exists y:e . fast' car' y d"
          " & (exists z:e . policeman' z & has' z y)) -> d' > d) & fast' car' x d' & has' g* x",
    # than every policeman: NP wide over the complement
    "than_every": "exists x:e . exists d':d . (forall z:e . policeman' z -> (forall d:d . (exists y:e . fast' car' y d"
          " & has' z y) -> d' > d)) & fast' car' x d' & has' g* x",
    # than Bill or Richard, coordination wide over WH: disjunction of the two comparisons
    "either": "exists x:e . exists d':d . ((forall d:d . (exists y:e . fast' car' y d & own' b* y) -> d' > d)"
          " | (forall d:d . (exists y:e . fast' car' y d & own' r* y) -> d' > d)) & fast' car' x d' & own' g* x",
    # WH wide over the coordination: exceed every car of either
    "both": "exists x:e . exists d':d . (forall d:d . (exists y:e . fast' car' y d & (own' b* y | own' r* y))"
          " -> d' > d) & fast' car' x d' & own' g* x",
    # direct-analysis degree properties
    "heim_rich": "lam x:e . iota d:d . rich' x d",
    "heim_fast_car": "lam x:e . iota d:d . exists y:e . fast' car' y d & own' x y",
    "heim_two_cars": "lam x:e . iota d:d . atleast 2 y:e . fast' car' y d & own' x y",
}

FORMS = {k: read_term(v) for k, v in TEXT.items()}
