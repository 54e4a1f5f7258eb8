"""
Strings and string formatting templates used by the numerics subpackage.
"""

#: Message displayed when a tolerance or bound is not positive.
NOT_POSITIVE = "IntegratorConfig.{name} must be positive (got {value})!"

#: Message displayed when an unknown Runge-Kutta method is requested.
BAD_METHOD = "Unknown integration method {method!r}! Available methods: {methods}."

#: Message displayed when the stepper reports a step size underflow.
STIFFNESS_FAILURE = "Integration from {initial} stopped at t={time}: {reason}"

#: Message displayed when an orbit does not return to the section.
NO_RETURN = "The orbit through ({amplitude}, 0) did not return to the section ({reason})."

#: Message displayed when refinement changes a period more than allowed.
UNCONVERGED_PERIOD = "Period at amplitude {amplitude} did not converge: refinement error {error:.3e} for period {period:.12g}."

#: Message displayed when an amplitude is not a positive finite number.
BAD_AMPLITUDE = "Amplitudes must be positive and finite (got {amplitude})!"

#: Message displayed when an initial condition is not finite.
BAD_INITIAL_CONDITION = "Initial conditions must be finite (got {initial})!"

#: Message displayed when a passage time kind receives missing parameters.
MISSING_PASSAGE_PARAMETERS = "{kind} passage times need the parameters {required} (got {given})!"

#: Message displayed when a passage time parameter is out of range.
BAD_PASSAGE_PARAMETER = "Invalid {kind} passage time parameter {name}={value}: {reason}!"

#: Message displayed when a passage time model does not reach its exit section.
PASSAGE_NOT_REACHED = "The {kind} model started at s={s} did not reach the exit section."

#: Message displayed when the oracle can not reach a conclusion.
ORACLE_INCONCLUSIVE = "Monodromy oracle inconclusive for {system}: {details}"

#: Message displayed when the oracle contradicts the exact verdict.
ORACLE_DISAGREES = "Numerical oracle ({outcome}) contradicts the exact verdict ({verdict}) for {system}!"

# flake8: noqa: E501
