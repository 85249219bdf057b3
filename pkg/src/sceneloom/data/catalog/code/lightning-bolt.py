"""Lightning Bolt generator (Weather)."""

PARAMS = {
    "size": 2.815,
    "detail": 1,
    "roughness": 0.482,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Lightning Bolt"
    for key, value in params.items():
        node[key] = value
    return node
