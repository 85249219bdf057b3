"""Crystal Shards generator (Scattering)."""

PARAMS = {
    "size": 1.573,
    "detail": 4,
    "roughness": 0.266,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Crystal Shards"
    for key, value in params.items():
        node[key] = value
    return node
