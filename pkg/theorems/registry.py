"""
registry.py - The results this project can check

One entry per theorem or corollary: the parameter names it takes, a short
statement, the family it belongs to (used by `suite --filter`) and a worked
parameter set. Where a result comes without worked numbers the
example is a feasible point found by evaluating the hypothesis directly
(LOM_K, LOM_ALEX, STR_K, STR_H, STR_L, STR_CONV).
"""

THEOREMS = {
    'CH_P': {
        'params': ('a', 'c'),
        'title': "Re c >= |a| + 2  =>  Phi(a; c; z) in Pe",
        'family': 'kummer',
        'example': {'a': -1, 'c': 3},
    },
    'CH_PDERIV': {
        'params': ('a', 'c'),
        'title': "a != 0, Re c >= |a + 1| + 1  =>  (c/a) Phi'(a; c; z) in Pe",
        'family': 'kummer',
        'example': {'a': 1, 'c': 3},
    },
    'CH_K': {
        'params': ('a', 'c'),
        'title': "(e-1)|c-2| + |a| <= (e-1)^2 (e+1)/e^2  =>  Lambda(a; c; z) in Ke",
        'family': 'kummer',
        'example': {'a': 1, 'c': 2},
    },
    'CH_S': {
        'params': ('a', 'c'),
        'title': "(e-1)|c-3| + |a-1| <= (e-1)^2 (e+1)/e^2  =>  z Phi(a; c; z) in Se*",
        'family': 'kummer',
        'example': {'a': 2, 'c': 3},
    },
    'CH_GDELTA': {
        'params': ('delta',),
        'title': "|delta - 1| <= (e^3 - 2e^2 - e + 1)/(e^2 (e-1))  =>  g_delta in Ke",
        'family': 'kummer',
        'example': {'delta': 1},
    },
    'CH_HDELTA': {
        'params': ('delta',),
        'title': "|delta - 2| <= (e^2 - 1)/e^2  =>  h_delta = z Phi(1; 1 + delta; z) in Se*",
        'family': 'kummer',
        'example': {'delta': 2},
    },
    'LOM_K': {
        'params': ('mu', 'nu'),
        'title': "three conditions on (mu, nu)  =>  h_{mu,nu} in Ke",
        'family': 'lommel',
        'example': {'mu': 8, 'nu': 3},
    },
    'LOM_ALEX': {
        'params': ('mu', 'nu'),
        'title': "two conditions on (mu, nu)  =>  f_{mu,nu} in Ke and h_{mu,nu} in Se*",
        'family': 'lommel',
        'example': {'mu': 5, 'nu': 4},
    },
    'LOM_P': {
        'params': ('mu', 'nu'),
        'title': "4 Re mu >= (e-1)|(mu+1)^2 - nu^2| - 3  =>  h_{mu,nu}(z)/z in Pe",
        'family': 'lommel',
        'example': {'mu': 1, 'nu': 0},
    },
    'STR_P': {
        'params': ('kappa', 'c'),
        'title': "Re kappa - (e-1)/2 |kappa - 1| >= |c|/4 + 1/2  =>  u in Pe",
        'family': 'struve',
        'example': {'kappa': 2, 'c': 1},
    },
    'STR_P_REC': {
        'params': ('kappa', 'c'),
        'title': "Re(kappa + 1) - (e-1)/2 |kappa| >= |c|/4 + 1/2  =>  (2 kappa / c z)(1 - 2 z u' - u) in Pe",
        'family': 'struve',
        'example': {'kappa': 2, 'c': 1},
    },
    'STR_K': {
        'params': ('kappa', 'c'),
        'title': "(2 kappa / e)(4 sin 1 + 3 - e) >= (e+1)|c| + ...  =>  6 kappa (1 - u)/c in Ke",
        'family': 'struve',
        'example': {'kappa': 16, 'c': 1},
    },
    'STR_H': {
        'params': ('nu',),
        'title': "nu above the Struve threshold  =>  -3(2 nu + 3)(H_nu - 1) in Ke, its z-derivative form in Se*",
        'family': 'struve',
        'example': {'nu': 14.5},
    },
    'STR_L': {
        'params': ('nu',),
        'title': "nu above the Struve threshold  =>  3(2 nu + 3)(L_nu - 1) in Ke, its z-derivative form in Se*",
        'family': 'struve',
        'example': {'nu': 14.5},
    },
    'STR_CONV': {
        'params': ('kappa', 'c'),
        'title': "STR_K hypothesis  =>  6 kappa (1 - u)/c * f in Ke for convex f, A[.] and L[.] too",
        'family': 'struve',
        'example': {'kappa': 16, 'c': 1},
    },
}
