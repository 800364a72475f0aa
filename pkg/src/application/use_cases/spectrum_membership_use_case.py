"""Use case for testing whether a measure lies in a family's spectrum."""

from fractions import Fraction

from src.application.dtos.spectrum_dto import SpectrumDTO
from src.domain.exceptions.domain_exceptions import InvalidInputException
from src.domain.services.constructions import spectrum_membership
from src.domain.services.number_theory import is_prime
from src.domain.value_objects.family_tag import FamilyTag


class SpectrumMembershipUseCase:
    """Use case for the measure spectrum of the C and B families."""

    def execute(self, p: int, x: Fraction, family: FamilyTag) -> SpectrumDTO:
        """Decide membership of x.

        Args:
            p: Prime
            x: Candidate measure in [0, 1]
            family: FamilyTag.C or FamilyTag.B

        Returns:
            Membership with the expansion of x/(p-1) that decided it

        Raises:
            InvalidInputException: If p is not prime or the family has no spectrum
            OutOfRangeException: If x lies outside [0, 1]
        """
        if not is_prime(p):
            raise InvalidInputException(f"{p} is not prime")
        result = spectrum_membership(p, x, family)
        return SpectrumDTO(
            prime=p,
            x=Fraction(x),
            family=family.value,
            member=result.member,
            preperiod=result.preperiod,
            period=result.period,
            leading_digit=result.leading_digit,
        )
