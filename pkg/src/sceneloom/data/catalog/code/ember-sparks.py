"""Ember Sparks generator (Scattering)."""

PARAMS = {
    "size": 1.961,
    "detail": 1,
    "roughness": 0.522,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Ember Sparks"
    for key, value in params.items():
        node[key] = value
    return node
