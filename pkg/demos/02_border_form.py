"""The determinant of a bordered matrix is bilinear in the new row and column."""
from maxdet import A2, BorderAssignment, bordered_det, build_border_form, eval_border_form

form = build_border_form(A2)
print("base det:", form.base_det)
print("coefficients (negated adjugate):", form.coeffs.rows)

# Evaluate every border of the 2x2 seed both ways
for x in [(0, 0), (0, 1), (1, 0), (1, 1)]:
    for y in [(0, 0), (0, 1), (1, 0), (1, 1)]:
        asg = BorderAssignment(x, y, 1)
        lhs, rhs = eval_border_form(form, asg), bordered_det(A2, asg)
        flag = "" if lhs == rhs else "  <-- mismatch"
        print(f"x={x} y={y}: form={lhs:>2} direct={rhs:>2}{flag}")
