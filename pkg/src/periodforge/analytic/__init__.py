from .ball import (ComplexBall, ball_identity, ball_mat_det, ball_mat_from_rational,
                   ball_mat_inverse, ball_mat_max_rad, ball_matrix, precision,
                   set_precision)
