from pydantic import BaseModel



class RatePoint(BaseModel):
    """Value of the Fenchel-Legendre transform at `x`.

    `maximizer` is the u attaining sup{u*x - Lambda(u)}. When the supremum is
    only approached at an open truncation endpoint, `attained` is `False`
    and `maximizer` is that endpoint.
    """
    x: float
    value: float
    maximizer: float
    attained: bool

    class Config:
        frozen = True
