"""Pine Bark 04 Material generator (Materials)."""

PARAMS = {
    "size": 3.61,
    "detail": 2,
    "roughness": 0.565,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Pine Bark 04 Material"
    for key, value in params.items():
        node[key] = value
    return node
