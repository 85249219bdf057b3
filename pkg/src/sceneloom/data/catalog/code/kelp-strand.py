"""Kelp Strand generator (Plants)."""

PARAMS = {
    "size": 0.856,
    "detail": 1,
    "roughness": 0.988,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Kelp Strand"
    for key, value in params.items():
        node[key] = value
    return node
