"""Pine Tree generator (Trees)."""

PARAMS = {
    "size": 1.732,
    "detail": 1,
    "roughness": 0.259,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Pine Tree"
    for key, value in params.items():
        node[key] = value
    return node
