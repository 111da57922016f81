"""Driving the DSL from Python: evaluate lines, translate to core form."""

# %%
from mdsl.frontend import Session, translate

session = Session(seed=1)
program = """
let x = Set {1,2,3}
let y = Set {2,4..6}
union x y
cartProduct x y
(True ∨ False) <=> (True ∧ True)
10 `p` 5
inverse (Matrix [[1,1],[1,(-1)]])
shuffle [1..8]
"""
for line in program.strip().splitlines():
    out = session.run_line(line)
    print("mdsl>", line)
    if out is not None:
        print(out)

# %%
# The preprocessor rewrites operators and infix calls into plain calls.
print(translate(program))
